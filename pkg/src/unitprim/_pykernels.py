"""Pure-Python inner loops. Mirrors ``_ckernels.pyx`` function for function."""


def convolve(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def recurrence_series(num, den, order, sign):
    """Coefficients of num/den up to ``order`` terms; ``den[0]`` must equal ``sign``."""
    out = []
    nd = len(den)
    nn = len(num)
    for i in range(order):
        acc = num[i] if i < nn else 0
        top = i if i < nd - 1 else nd - 1
        for j in range(1, top + 1):
            acc = acc - den[j] * out[i - j]
        out.append(acc if sign == 1 else -acc)
    return out


def dp_next_column(prev, n_max):
    cur = []
    for n in range(n_max + 1):
        acc = prev[n]
        for k in range(0, n, 2):
            acc += prev[k] * cur[n - 1 - k]
        cur.append(acc)
    return cur


def matmul(a, b):
    size = len(a)
    bt = list(zip(*b))
    out = []
    for i in range(size):
        row = a[i]
        out_row = []
        for j in range(size):
            col = bt[j]
            acc = 0
            for k in range(size):
                if row[k] and col[k]:
                    acc += row[k] * col[k]
            out_row.append(acc)
        out.append(out_row)
    return out
