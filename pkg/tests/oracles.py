"""Independent reference computations used only by the tests.

Subresultants here come straight from determinants of Sylvester-type matrices
(fraction-free Bareiss elimination), sharing nothing with the pseudo-remainder
implementation under test except polynomial arithmetic itself.
"""

from __future__ import annotations

from genreg.polycore import Polynomial, exact_div


def det(M: list[list[Polynomial]], one: Polynomial) -> Polynomial:
    """Bareiss determinant of a square matrix of polynomials."""
    n = len(M)
    if n == 0:
        return one
    A = [row[:] for row in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if A[k][k].is_zero:
            for r in range(k + 1, n):
                if not A[r][k].is_zero:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return one.ctx.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def _rows(p: Polynomial, pos: int, deg: int, nshifts: int, ncols: int):
    cs = p.coeff_list(pos)
    cs = cs + [p.ctx.zero] * (deg + 1 - len(cs))
    zero = p.ctx.zero
    rows = []
    for s in range(nshifts - 1, -1, -1):
        # row for x^s * p; column c holds the coefficient of x^(ncols-1-c)
        row = []
        for c in range(ncols):
            k = ncols - 1 - c - s
            row.append(cs[k] if 0 <= k <= deg else zero)
        rows.append(row)
    return rows


def sylvester_subresultant(f: Polynomial, g: Polynomial, pos: int, j: int) -> Polynomial:
    """Determinantal j-th subresultant (0 <= j <= deg g, j < deg f), f rows first."""
    m, l = f.degree(pos), g.degree(pos)
    ncols = m + l - j
    M = _rows(f, pos, m, l - j, ncols) + _rows(g, pos, l, m - j, ncols)
    nrows = len(M)
    one = f.ctx.one
    out = f.ctx.zero
    lead = nrows - 1
    for i in range(j + 1):
        col = ncols - 1 - i  # column of x^i
        sub = [row[:lead] + [row[col]] for row in M]
        out = out + det(sub, one) * f.ctx.gen(f.ctx.names[pos]) ** i
    return out


def sylvester_resultant(f: Polynomial, g: Polynomial, pos: int) -> Polynomial:
    m, l = f.degree(pos), g.degree(pos)
    ncols = m + l
    M = _rows(f, pos, m, l, ncols) + _rows(g, pos, l, m, ncols)
    return det(M, f.ctx.one)


def successive_resultant_oracle(f: Polynomial, T) -> Polynomial:
    for t in reversed(list(T)):
        v = t.top_position()
        if f.is_zero:
            break
        if f.degree(v) == 0:
            continue
        f = sylvester_resultant(f, t, v)
    return f
