"""Exact integer matrix algebra: Hermite and Smith normal forms, kernels,
saturation, unimodularity.

Everything here runs on Python's arbitrary-precision integers.  Matrices are
immutable (hashable) so they can serve as canonical labels elsewhere in the
package.  The Hermite normal form convention is row-style with positive
pivots and entries above each pivot reduced into [0, pivot); this makes
``hnf(A).H`` a unique canonical form of the row lattice of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix in row-major order.

    A matrix with zero rows (or zero columns) is legal; ``cols`` is kept
    explicitly so the empty cases stay well-typed.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        return IntMatrix(len(rows), cols, rows)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n))
                                     for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix shapes do not compose")
        ot = other.transpose().entries
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ot)
                               for r in self.entries))

    def mul_vec(self, v):
        """Matrix times column vector; entries may be ints or Fractions."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        zero = Fraction(0) if _has_fraction(v) else 0
        return tuple(sum((x * y for x, y in zip(r, v)), zero) for r in self.entries)

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in stack")
        return IntMatrix(self.rows + other.rows, self.cols,
                         self.entries + other.entries)

    def with_row(self, v) -> "IntMatrix":
        v = tuple(int(x) for x in v)
        if len(v) != self.cols:
            raise ValueError("row length mismatch")
        return IntMatrix(self.rows + 1, self.cols, self.entries + (v,))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def _has_fraction(v) -> bool:
    return any(isinstance(x, Fraction) for x in v)


def vec_mul(v, a: IntMatrix):
    """Row vector times matrix; entries may be ints or Fractions."""
    if len(v) != a.rows:
        raise ValueError("vector length mismatch")
    zero = Fraction(0) if _has_fraction(v) else 0
    return tuple(sum((x * a.entries[i][j] for i, x in enumerate(v)), zero)
                 for j in range(a.cols))


@dataclass(frozen=True)
class HNFResult:
    """Row-style Hermite normal form: U @ A == H with det(U) = +-1."""

    H: IntMatrix
    U: IntMatrix


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form: U @ A @ V == D, diagonal with d_1 | d_2 | ... > 0."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def divisors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries d_1 | d_2 | ... | d_r."""
        out = []
        for i in range(min(self.D.rows, self.D.cols)):
            d = self.D.entries[i][i]
            if d == 0:
                break
            out.append(d)
        return tuple(out)


# -- in-place helpers on list-of-list matrices -------------------------------

def _identity_list(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _swap_rows(m, u, i, j):
    if i != j:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]


def _negate_row(m, u, i):
    m[i] = [-x for x in m[i]]
    u[i] = [-x for x in u[i]]


def _row_sub(m, u, i, k, q):
    """row_i -= q * row_k"""
    if q:
        m[i] = [a - q * b for a, b in zip(m[i], m[k])]
        u[i] = [a - q * b for a, b in zip(u[i], u[k])]


def _row_add(m, u, i, k):
    m[i] = [a + b for a, b in zip(m[i], m[k])]
    u[i] = [a + b for a, b in zip(u[i], u[k])]


def _swap_cols(m, v, j, k):
    if j != k:
        for row in m:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]


def _col_sub(m, v, j, k, q):
    """col_j -= q * col_k"""
    if q:
        for row in m:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]


def _freeze(m, cols) -> IntMatrix:
    return IntMatrix(len(m), cols, tuple(tuple(r) for r in m))


def hnf(a: IntMatrix) -> HNFResult:
    """Row-style Hermite normal form with unimodular transform.

    Pivots are positive, entries above each pivot lie in [0, pivot), zero
    rows sink to the bottom.  The nonzero rows of H are the unique canonical
    basis of the row lattice of ``a``.
    """
    m, n = a.rows, a.cols
    H = [list(r) for r in a.entries]
    U = _identity_list(m)
    pivots: list[tuple[int, int]] = []
    pr = 0
    for c in range(n):
        if pr == m:
            break
        nz = [i for i in range(pr, m) if H[i][c] != 0]
        if not nz:
            continue
        while True:
            i0 = min(nz, key=lambda i: abs(H[i][c]))
            _swap_rows(H, U, pr, i0)
            if H[pr][c] < 0:
                _negate_row(H, U, pr)
            clean = True
            for i in range(pr + 1, m):
                if H[i][c]:
                    _row_sub(H, U, i, pr, H[i][c] // H[pr][c])
                    if H[i][c]:
                        clean = False
            if clean:
                break
            nz = [i for i in range(pr, m) if H[i][c] != 0]
        pivots.append((pr, c))
        pr += 1
    # second pass: reduce entries above each pivot into [0, pivot)
    for r, c in pivots:
        for i in range(r):
            _row_sub(H, U, i, r, H[i][c] // H[r][c])
    return HNFResult(_freeze(H, n), _freeze(U, m))


def snf(a: IntMatrix) -> SNFResult:
    """Smith normal form with both unimodular transforms.

    Returns D = U @ a @ V diagonal with the divisibility chain
    d_1 | d_2 | ... | d_r > 0 followed by zeros.
    """
    m, n = a.rows, a.cols
    M = [list(r) for r in a.entries]
    U = _identity_list(m)
    V = _identity_list(n)
    for t in range(min(m, n)):
        # choose the absolutely smallest nonzero entry of the block as pivot
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = M[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        _swap_rows(M, U, t, piv[0])
        _swap_cols(M, V, t, piv[1])
        if M[t][t] < 0:
            _negate_row(M, U, t)
        while True:
            for i in range(t + 1, m):
                while M[i][t]:
                    _row_sub(M, U, i, t, M[i][t] // M[t][t])
                    if M[i][t]:
                        _swap_rows(M, U, i, t)
            for j in range(t + 1, n):
                while M[t][j]:
                    _col_sub(M, V, j, t, M[t][j] // M[t][t])
                    if M[t][j]:
                        _swap_cols(M, V, j, t)
            if any(M[i][t] for i in range(t + 1, m)):
                continue  # a column swap re-dirtied the pivot column
            # force d_t to divide the rest of the block
            d = M[t][t]
            viol = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                         if M[i][j] % d), None)
            if viol is None:
                break
            _row_add(M, U, t, viol[0])
    return SNFResult(_freeze(M, n), _freeze(U, m), _freeze(V, n))


def pivot_positions(h: IntMatrix) -> tuple[tuple[int, int], ...]:
    """(row, col) of the leading entry of each nonzero row of an echelon matrix."""
    out = []
    for i, r in enumerate(h.entries):
        for j, x in enumerate(r):
            if x:
                out.append((i, j))
                break
    return tuple(out)


def rank(a: IntMatrix) -> int:
    return len(pivot_positions(hnf(a).H))


def row_basis(a: IntMatrix) -> IntMatrix:
    """Canonical (HNF, nonzero-row) basis of the row lattice of ``a``."""
    h = hnf(a).H
    nz = tuple(r for r in h.entries if any(r))
    return IntMatrix(len(nz), a.cols, nz)


def in_row_lattice(h: IntMatrix, v) -> bool:
    """Membership of an integer vector in the row lattice of a canonical basis.

    ``h`` must be an HNF row basis (as produced by :func:`row_basis`).
    """
    v = [int(x) for x in v]
    if len(v) != h.cols:
        raise ValueError("vector length mismatch")
    for r, c in pivot_positions(h):
        p = h.entries[r][c]
        if v[c] % p:
            return False
        q = v[c] // p
        if q:
            v = [a - q * b for a, b in zip(v, h.entries[r])]
    return not any(v)


def left_kernel(a: IntMatrix) -> IntMatrix:
    """HNF canonical basis of the lattice {k in Z^rows : k @ a = 0}."""
    res = hnf(a)
    zero = [i for i in range(a.rows) if not any(res.H.entries[i])]
    if not zero:
        return IntMatrix(0, a.rows, ())
    k = IntMatrix(len(zero), a.rows, tuple(res.U.entries[i] for i in zero))
    return row_basis(k)


def saturation(a: IntMatrix) -> IntMatrix:
    """HNF basis of the saturation of the row lattice of ``a`` in Z^cols.

    The saturation is the set of integer vectors in the rational row span,
    computed as the double orthogonal complement (kernel of the kernel).
    """
    ker = left_kernel(a.transpose())     # integer right kernel of a, as rows
    return left_kernel(ker.transpose())


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    M = [list(r) for r in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def unimodular_inverse(u: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    res = hnf(u)
    if res.H != IntMatrix.identity(u.rows):
        raise ValueError("matrix is not unimodular")
    return res.U


def is_unimodular_matrix(a: IntMatrix) -> bool:
    """True iff every maximal (cols x cols) minor of ``a`` lies in {-1, 0, 1}."""
    k = a.cols
    if a.rows < k:
        return True
    for rows in combinations(range(a.rows), k):
        sub = IntMatrix(k, k, tuple(a.entries[i] for i in rows))
        if abs(det(sub)) > 1:
            return False
    return True


def is_primitive(v) -> bool:
    """True iff the gcd of the entries is 1.  The zero vector is rejected."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive content")
    return g == 1
