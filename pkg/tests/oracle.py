"""Independent linear-algebra oracle built on sympy.

Works only from the two tables of polynomial values, never from the
closed-form coefficients under test.
"""

import sympy as sp

from askey_contiguity import families as fam


def to_sympy(value):
    return sp.Rational(int(value.numerator), int(value.denominator))


def grid(left, right, eta):
    return [x for x in range(left.N + 1) if 0 <= x + eta <= right.N]


def span_exists(left, right, eta, offsets) -> bool:
    """True when R_i(x; left) lies in the span of R_{i+e}(x + eta; right), e in offsets, for every degree."""
    L, R = fam.series_table(left), fam.series_table(right)
    xs = grid(left, right, eta)
    for i in range(left.N + 1):
        if any(i + e > right.N for e in offsets):
            continue
        cols = [[to_sympy(R[i + e][x + eta]) for x in xs] for e in offsets if i + e >= 0]
        M = sp.Matrix(cols).T
        aug = M.row_join(sp.Matrix([to_sympy(L[i][x]) for x in xs]))
        if M.rank() != aug.rank():
            return False
    return True


def solve_coefficients(left, right, eta, lam_values, offsets, i):
    """Unique coefficients c_e with lam(x) R_i(x; left) = sum_e c_e R_{i+e}(x + eta; right), or None."""
    L, R = fam.series_table(left), fam.series_table(right)
    xs = grid(left, right, eta)
    used = [e for e in offsets if 0 <= i + e <= right.N]
    M = sp.Matrix([[to_sympy(R[i + e][x + eta]) for e in used] for x in xs])
    b = sp.Matrix([to_sympy(lam_values[x]) * to_sympy(L[i][x]) for x in xs])
    if M.rank() != len(used) or M.row_join(b).rank() != len(used):
        return None
    sol = (M.T * M).LUsolve(M.T * b)
    return dict(zip(used, sol))
