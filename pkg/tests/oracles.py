"""Independent reference computations used by the tests.

Everything here is written directly from the defining formulas with plain
Python integers / Fractions and dense lists, sharing no code with the package.
"""
from fractions import Fraction


def idx(n):
    return list(range(-n, 0)) + list(range(1, n + 1))


def sgn(i):
    return 1 if i > 0 else -1


def p(n, i):
    return idx(n).index(i)


def identity(n):
    d = 2 * n
    return [[1 if r == c else 0 for c in range(d)] for r in range(d)]


def matmul(a, b, mod=None):
    d = len(a)
    out = [[sum(a[r][k] * b[k][c] for k in range(d)) for c in range(d)] for r in range(d)]
    if mod:
        out = [[x % mod for x in row] for row in out]
    return out


def transvection(n, i, j, a, mod=None):
    """T_ij(a) = 1 + a e_ij - a sign(i) sign(j) e_{-j,-i};  T_{i,-i}(a) = 1 + a sign(i) e_{i,-i}."""
    m = identity(n)
    if j == -i:
        m[p(n, i)][p(n, -i)] += a * sgn(i)
    else:
        m[p(n, i)][p(n, j)] += a
        m[p(n, -j)][p(n, -i)] -= a * sgn(i) * sgn(j)
    if mod:
        m = [[x % mod for x in row] for row in m]
    return m


def form(x, y, n):
    """<x, y> = Σ_{k>0} x_k y_{-k} - x_{-k} y_k on index-ordered lists."""
    return sum(x[p(n, k)] * y[p(n, -k)] - x[p(n, -k)] * y[p(n, k)] for k in range(1, n + 1))


def esd(n, u, v, a):
    """Columns w = e_k mapped to w + u(<v,w> + a<u,w>) + v<u,w>."""
    d = 2 * n
    cols = []
    for k in range(d):
        w = [1 if r == k else 0 for r in range(d)]
        s1 = form(v, w, n) + a * form(u, w, n)
        s2 = form(u, w, n)
        cols.append([w[r] + u[r] * s1 + v[r] * s2 for r in range(d)])
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def word_matrix(n, letters, mod=None):
    """Product of transvections for (i, j, a, inverse) tuples with integer a."""
    m = identity(n)
    for i, j, a, inv in letters:
        m = matmul(m, transvection(n, i, j, -a if inv else a), mod)
    return m


def poly_mul_mod(a, b, m):
    """Schoolbook product of coefficient lists (lowest degree first) mod m."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % m
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def v2(x: Fraction) -> int:
    """2-adic valuation of a nonzero rational."""
    num, den, k = x.numerator, x.denominator, 0
    while num % 2 == 0:
        num //= 2
        k += 1
    while den % 2 == 0:
        den //= 2
        k -= 1
    return k


def minimal_dilation(coeffs):
    """Smallest N with c·2^{N·deg} integral for every letter coefficient c·t^deg
    (None when some coefficient never becomes integral).

    coeffs: list of dicts {degree: Fraction}.
    """
    N = 0
    for poly in coeffs:
        for deg, c in poly.items():
            if c == 0:
                continue
            odd = c.denominator
            while odd % 2 == 0:
                odd //= 2
            need = max(0, -v2(c))
            if odd != 1 or (deg == 0 and need):
                return None
            if need:
                N = max(N, -(-need // deg))
    return N


def eval_fraction_word(n, letters, t):
    """Dense product over Q for letters (i, j, coeff_poly, inverse) evaluated at t."""
    m = [[Fraction(x) for x in row] for row in identity(n)]
    for i, j, poly, inv in letters:
        a = sum(Fraction(c) * Fraction(t) ** k for k, c in poly.items())
        m = matmul(m, transvection(n, i, j, -a if inv else a))
    return m
