"""Pure-Python kernels for products of elementary column operations.

Matrices are flat, column-major lists of length d*d.  An operation
``(dst, src, c)`` performs ``col[dst] += c * col[src]``, i.e. right
multiplication by an elementary matrix 1 + c·e_{src,dst}.
"""

BACKEND = "python"


def col_ops_mod(flat, d, ops, m):
    cols = [flat[q * d:(q + 1) * d] for q in range(d)]
    for dst, src, c in ops:
        cs = cols[src]
        cols[dst] = [(x + c * y) % m for x, y in zip(cols[dst], cs)]
    return [x for col in cols for x in col]


def col_ops_int(flat, d, ops):
    cols = [flat[q * d:(q + 1) * d] for q in range(d)]
    for dst, src, c in ops:
        cs = cols[src]
        cols[dst] = [x + c * y for x, y in zip(cols[dst], cs)]
    return [x for col in cols for x in col]


def matmul_mod(a, b, d, m):
    out = [0] * (d * d)
    for q in range(d):
        bq = b[q * d:(q + 1) * d]
        acc = [0] * d
        for k, bk in enumerate(bq):
            if bk:
                ak = a[k * d:(k + 1) * d]
                acc = [x + bk * y for x, y in zip(acc, ak)]
        out[q * d:(q + 1) * d] = [x % m for x in acc]
    return out


def matmul_int(a, b, d):
    out = [0] * (d * d)
    for q in range(d):
        bq = b[q * d:(q + 1) * d]
        acc = [0] * d
        for k, bk in enumerate(bq):
            if bk:
                ak = a[k * d:(k + 1) * d]
                acc = [x + bk * y for x, y in zip(acc, ak)]
        out[q * d:(q + 1) * d] = acc
    return out
