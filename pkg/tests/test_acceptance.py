"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL summary
printed at the end of the session.
"""

import random
import time


from unitprim import kernels
from unitprim.bseq import (
    b_by_dp,
    build_table,
    h_numerator,
    load_table1,
    table_by_contfrac,
    table_by_matrix,
    table_by_series,
)
from unitprim.charpoly import (
    q_by_determinant,
    q_by_recurrence,
    r_by_bordered,
    r_family,
    r_from_q,
    trig_check,
    trig_values,
    verify_identity_2,
    verify_identity_3,
    verify_identity_4,
    verify_q_ogf,
)
from unitprim.cli import main
from unitprim.bseq import BTable
from unitprim.exactcore import IntPoly
from unitprim.matrixops import (
    Matrix,
    build_unit_primitive,
    det,
    unit_primitive_inverse,
    verify_lemma1,
)

TRIG_XS = (0.1, -0.1, 0.3, -0.3, 0.49)


def test_c1_table1_reproduction(criterion):
    with criterion("C1", "Table 1 by dp, series, contfrac, matrix (<1 s)") as notes:
        start = time.perf_counter()
        golden = load_table1()
        for method in ("dp", "series", "contfrac"):
            assert build_table(5, 9, method).values == golden.values, method
        matrix = table_by_matrix(5, 9)
        for n in range(1, 6):
            assert matrix.row(n) == golden.row(n)
        elapsed = time.perf_counter() - start
        notes.append(f"60 entries, backend={kernels.backend()}")
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_c2_four_method_equivalence(criterion):
    with criterion("C2", "dp=series=contfrac n<=200 m<=40; dp=matrix n,m<=12 (<60 s)"):
        start = time.perf_counter()
        dp = b_by_dp(200, 40)
        assert table_by_series(200, 40).values == dp.values
        assert table_by_contfrac(200, 40).values == dp.values
        assert table_by_matrix(12, 12).values == dp.sub(12, 12).values
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_c3_identity_suites(criterion):
    with criterion("C3", "identities (2)+,(3),(4) for m<=40, Q generating function m<=30 (<30 s)") as notes:
        start = time.perf_counter()
        q = q_by_recurrence(42)
        r = r_family(40, "bordered")
        reports = [verify_identity_2(m, q) for m in range(41)]
        reports += [verify_identity_3(m, q) for m in range(41)]
        reports += [verify_identity_4(m, q, r) for m in range(1, 41)]
        reports += verify_q_ogf(30, q)
        failing = [(rep.name, rep.index) for rep in reports if not rep.passed or not rep.residual.is_zero()]
        assert not failing, failing
        elapsed = time.perf_counter() - start
        notes.append(f"{len(reports)} exact identities")
        assert elapsed < 30.0, f"took {elapsed:.1f}s"


def test_c4_literal_identity2_fails(criterion):
    with criterion("C4", "minus-sign form of identity (2) fails at m=0") as notes:
        rep = verify_identity_2(0, q_by_recurrence(1), literal=True)
        assert not rep.passed
        assert rep.residual != IntPoly()
        notes.append(f"residual {rep.residual.render()}")


def _lemma1_matrices():
    rng = random.Random(1729)

    def rand_row():
        return [rng.randint(-5, 5) for _ in range(5)]

    mats = []
    for k in range(100):
        rows = [rand_row() for _ in range(5)]
        if k % 10 == 0:
            # force a repeated or zero row so at least ten are singular
            rows[4] = list(rows[rng.randrange(4)]) if k % 20 == 0 else [0] * 5
        mats.append(Matrix.from_rows(rows))
    return mats


def test_c5_lemma1_property(criterion):
    with criterion("C5", "Lemma 1 on 100 random 5x5 matrices incl. >=5 singular") as notes:
        mats = _lemma1_matrices()
        assert len(mats) == 100
        singular = sum(1 for m in mats if det(m) == 0)
        assert singular >= 5
        assert all(verify_lemma1(m).passed for m in mats)
        notes.append(f"{singular} singular")


def test_c6_determinant_cross_check(criterion):
    with criterion("C6", "Q and R by determinant vs recurrence, m<=12"):
        q = q_by_recurrence(12)
        for m in range(13):
            assert q_by_determinant(m) == q[m], m
        for m in range(1, 13):
            assert r_by_bordered(m) == r_from_q(m, q), m


def test_c7_trigonometric_form(criterion):
    with criterion("C7", "trigonometric forms vs Q_m(-x)/Q_{m+1}(x) within 1e-8, m<=10") as notes:
        worst = 0.0
        for m in range(11):
            for x in TRIG_XS:
                rep = trig_check(m, x, 1e-8)
                assert rep.passed, (m, x, rep.residual)
                worst = max(worst, rep.residual)
        notes.append(f"max abs error {worst:.1e}; sine form with (-1)^(m+1)")


def test_c7b_sine_form_sign(criterion):
    with criterion("C7b", "sine ratio without (-1)^(m+1) is off by sign for even m") as notes:
        for m in range(11):
            for x in TRIG_XS:
                v = trig_values(m, x)
                expected = v["rational"] if m % 2 else -v["rational"]
                assert abs(v["sin_form_literal"] - expected) < 1e-8, (m, x)
        notes.append("holds for odd m, negated for even m")


def test_c8_ehrhart_numerators(criterion):
    with criterion("C8", "deg H_n <= n with 10 vanishing guard terms, n<=40"):
        for n in range(41):
            row = h_numerator(n, guard=10)
            assert row.numerator.degree <= n
            assert row.numerator[0] == 1
        assert h_numerator(0).numerator == IntPoly((1,))
        assert h_numerator(2).numerator == IntPoly((1,))
        assert h_numerator(3).numerator == IntPoly((1, 1))


B5_INV = [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, -1],
    [0, 0, 1, -1, 0],
    [0, 1, -1, 0, 0],
    [1, -1, 0, 0, 0],
]


def test_c9_inverse_structure(criterion):
    with criterion("C9", "B(m) B(m)^-1 = I for m<=100; B(5)^-1 as displayed"):
        for m in range(1, 101):
            assert build_unit_primitive(m) @ unit_primitive_inverse(m) == Matrix.identity(m), m
        assert unit_primitive_inverse(5).to_lists() == B5_INV


def test_c10_cli_contract(criterion, capsys, tmp_path):
    with criterion("C10", "CLI: table --method all exit 0, corrupted fixture exit 1, CSV round-trip"):
        assert main(["table", "--method", "all", "--n", "12", "--m", "12"]) == 0
        capsys.readouterr()

        lines = load_table1().to_csv().splitlines()
        fields = lines[6].split(",")
        fields[5] = str(int(fields[5]) + 1)
        lines[6] = ",".join(fields)
        bad = tmp_path / "table1.csv"
        bad.write_text("\n".join(lines) + "\n")
        assert main(["table", "--method", "all", "--n", "12", "--m", "12", "--golden", str(bad)]) == 1
        capsys.readouterr()

        assert main(["table", "--n", "30", "--m", "12", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert BTable.from_csv(out).values == b_by_dp(30, 12).values
