"""Exact integer lattice reduction and rational LP feasibility."""
from __future__ import annotations

from fractions import Fraction


def hermite_rows(rows, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns ``(basis, pivots)``: the nonzero echelon rows (positive pivots,
    entries above each pivot reduced into ``[0, pivot)``) and the pivot
    column of each row.  Rows whose pivot column is ``>= c`` form a basis of
    the sublattice with zeros in the first ``c`` coordinates.
    """
    a = [[int(x) for x in row] for row in rows]
    for row in a:
        if len(row) != ncols:
            raise ValueError("row length does not match ncols")
    pivots: list[int] = []
    i = 0
    for col in range(ncols):
        while True:
            live = [k for k in range(i, len(a)) if a[k][col] != 0]
            if not live:
                break
            k = min(live, key=lambda s: abs(a[s][col]))
            a[i], a[k] = a[k], a[i]
            done = True
            for s in range(i + 1, len(a)):
                if a[s][col]:
                    q = a[s][col] // a[i][col]
                    a[s] = [x - q * y for x, y in zip(a[s], a[i])]
                    if a[s][col]:
                        done = False
            if done:
                break
        if i < len(a) and a[i][col] != 0:
            if a[i][col] < 0:
                a[i] = [-x for x in a[i]]
            p = a[i][col]
            for s in range(i):
                q = a[s][col] // p
                if q:
                    a[s] = [x - q * y for x, y in zip(a[s], a[i])]
            pivots.append(col)
            i += 1
            if i == len(a):
                break
    return a[:i], pivots


def feasible_nonneg(A, b) -> bool:
    """Decide whether ``A x = b`` has a solution with ``x >= 0`` (phase-I simplex).

    Arithmetic is in exact fractions and Bland's rule prevents cycling.
    """
    m = len(A)
    if m == 0:
        return True
    n = len(A[0])
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    width = n + m
    # reduced costs of the artificial objective, last entry is -objective
    z = [-sum(T[i][j] for i in range(m)) for j in range(n)] + [Fraction(0)] * m
    z.append(-sum(T[i][-1] for i in range(m)))
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            return z[-1] == 0
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # unbounded direction cannot occur for a bounded-below objective
            raise ArithmeticError("phase-I simplex reported unboundedness")
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, T[r])]
        basis[r] = enter


def has_positive_kernel_vector(points) -> bool:
    """True iff ``sum lam_i * points[i] == 0`` for some ``lam`` with every ``lam_i >= 1``.

    Scaling shows ``lam_i >= 1`` is the same as ``lam_i > 0``.  Substituting
    ``lam = 1 + mu`` turns it into nonnegative feasibility of
    ``sum mu_i p_i = -sum p_i``.
    """
    points = [tuple(p) for p in points]
    if not points:
        return False
    dim = len(points[0])
    A = [[p[row] for p in points] for row in range(dim)]
    b = [-sum(p[row] for p in points) for row in range(dim)]
    return feasible_nonneg(A, b)
