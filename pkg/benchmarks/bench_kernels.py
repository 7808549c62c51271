"""Time the hot loops under each kernel backend.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import time

from unitprim import kernels
from unitprim.bseq import b_by_dp, table_by_contfrac, table_by_matrix, table_by_series
from unitprim.charpoly import q_by_recurrence, r_family


def _workloads(quick: bool):
    n, m = (200, 40) if quick else (600, 80)
    q = q_by_recurrence(400)
    big = q[400]
    return {
        f"dp table {n}x{m}": lambda: b_by_dp(n, m),
        f"series table {n}x{m}": lambda: table_by_series(n, m),
        f"contfrac table {n}x{m // 2}": lambda: table_by_contfrac(n, m // 2),
        "matrix table 12x12": lambda: table_by_matrix(12, 12),
        "poly mul deg 400 x 400": lambda: big * big.neg_x(),
        "bordered R_1..R_25": lambda: r_family(25, "bordered"),
    }


def run(repeat: int, quick: bool) -> dict[str, dict[str, float]]:
    results: dict[str, dict[str, float]] = {}
    outputs: dict[str, object] = {}
    original = kernels.backend()
    try:
        for name in kernels.available_backends():
            kernels.set_backend(name)
            for label, fn in _workloads(quick).items():
                best = float("inf")
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    out = fn()
                    best = min(best, time.perf_counter() - t0)
                key = repr(out.values) if hasattr(out, "values") else repr(out)
                if outputs.setdefault(label, key) != key:
                    raise SystemExit(f"backends disagree on {label}")
                results.setdefault(label, {})[name] = best
    finally:
        kernels.set_backend(original)
    return results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    results = run(args.repeat, args.quick)
    backends = kernels.available_backends()
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, times in results.items():
        row = f"{label:<28}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) > 1:
            row += f"{times['python'] / times['cython']:>11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
