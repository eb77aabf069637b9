"""Exact integer/rational linear algebra shared by every other module.

All arithmetic is arbitrary precision: matrices are Python ints, derived
quantities are ``fractions.Fraction``.  Nothing here ever touches a float,
so every equality test downstream is decidable.

Conventions:
  * basis vectors are ROWS of the matrix,
  * the Hermite normal form is row-style with positive pivots, pivot columns
    strictly increasing, entries above each pivot reduced into ``[0, pivot)``
    and zero rows collected at the bottom.  This form is unique, so equality
    of forms decides equality of row spans over the integers.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .errors import DimensionMismatchError, StructuralError

IntVector = tuple[int, ...]
Rational = int | Fraction
RationalVector = tuple[Fraction, ...]


def _as_int_row(row: Sequence) -> tuple[int, ...]:
    try:
        return tuple(operator.index(x) for x in row)
    except TypeError as exc:
        raise StructuralError(f"matrix entries must be integers: {row!r}") from exc


class LatticeBasis:
    """Square integer matrix whose rows generate a full-rank lattice.

    The determinant is computed once at construction (fraction-free Bareiss
    elimination); a zero determinant is rejected as a structural error.
    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("rows", "dim", "det")

    def __init__(self, rows: Sequence[Sequence[int]]):
        mat = tuple(_as_int_row(r) for r in rows)
        if not mat:
            raise StructuralError("a basis needs at least one row")
        n = len(mat)
        if any(len(r) != n for r in mat):
            raise StructuralError("basis matrix must be square")
        det = _bareiss_det(mat)
        if det == 0:
            raise StructuralError("rows are linearly dependent (determinant is zero)")
        self.rows = mat
        self.dim = n
        self.det = det

    def __setattr__(self, name, value):
        if name in self.__slots__ and hasattr(self, "det"):
            raise AttributeError("LatticeBasis is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, LatticeBasis) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LatticeBasis({[list(r) for r in self.rows]})"


class HermiteForm(NamedTuple):
    h: tuple[IntVector, ...]
    u: tuple[IntVector, ...]


@dataclass(frozen=True)
class GsoData:
    """Exact Gram-Schmidt data for a row matrix.

    ``mu`` is square lower triangular with unit diagonal, ``bstar_sq`` holds
    the squared lengths of the orthogonalized rows, and ``bstar`` caches the
    orthogonalized rows themselves (rational coordinates).
    """

    mu: tuple[RationalVector, ...]
    bstar_sq: tuple[Fraction, ...]
    bstar: tuple[RationalVector, ...]


def _bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(mat)
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def determinant(basis: LatticeBasis) -> int:
    """Exact determinant of the basis; its absolute value is the covolume."""
    return basis.det


def _matrix_rows(mat) -> list[list[int]]:
    if isinstance(mat, LatticeBasis):
        return [list(r) for r in mat.rows]
    rows = [list(_as_int_row(r)) for r in mat]
    if not rows:
        raise StructuralError("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise StructuralError("ragged matrix")
    return rows


def hermite_form(mat) -> HermiteForm:
    """Canonical row Hermite normal form ``H`` with unimodular ``U`` such that
    ``U * M = H``.  Accepts any integer matrix, square or not."""
    rows = _matrix_rows(mat)
    m = len(rows)
    n = len(rows[0])
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def combine(i: int, q: int, r: int) -> None:
        if q == 0:
            return
        ri, rr = rows[i], rows[r]
        rows[i] = [a - q * b for a, b in zip(ri, rr)]
        ui, ur = u[i], u[r]
        u[i] = [a - q * b for a, b in zip(ui, ur)]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][c]), i))
            if i0 != r:
                rows[r], rows[i0] = rows[i0], rows[r]
                u[r], u[i0] = u[i0], u[r]
            settled = True
            for i in range(r + 1, m):
                if rows[i][c] != 0:
                    combine(i, rows[i][c] // rows[r][c], r)
                    if rows[i][c] != 0:
                        settled = False
            if settled:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            combine(i, rows[i][c] // rows[r][c], r)
        r += 1
    return HermiteForm(
        tuple(tuple(row) for row in rows),
        tuple(tuple(row) for row in u),
    )


def hnf_nonzero_rows(mat) -> tuple[IntVector, ...]:
    """Nonzero rows of the canonical Hermite form; a canonical name for the
    integer row span of ``mat``."""
    return tuple(row for row in hermite_form(mat).h if any(row))


def same_lattice(b: LatticeBasis, c: LatticeBasis) -> bool:
    """True iff the two bases generate the same lattice (equal canonical
    Hermite forms)."""
    if b.dim != c.dim:
        raise DimensionMismatchError(f"dimensions differ: {b.dim} vs {c.dim}")
    return hermite_form(b.rows).h == hermite_form(c.rows).h


def _solve_exact(rows: Sequence[Sequence[Rational]], target: Sequence[Rational]):
    """Solve ``x . rows = target`` over the rationals.

    ``rows`` must be linearly independent (m rows of length n, m <= n).
    Returns the unique coefficient list, or None when the target lies outside
    the rational row span.
    """
    m = len(rows)
    n = len(rows[0])
    if len(target) != n:
        raise DimensionMismatchError(f"vector length {len(target)} does not match width {n}")
    # One equation per ambient coordinate, one unknown per row.
    aug = [[Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(n)]
    used = [False] * n
    pivot_row_of = []
    for col in range(m):
        pr = next((j for j in range(n) if not used[j] and aug[j][col] != 0), None)
        if pr is None:
            raise StructuralError("rows are linearly dependent")
        used[pr] = True
        pivot_row_of.append(pr)
        pv = aug[pr][col]
        aug[pr] = [x / pv for x in aug[pr]]
        prow = aug[pr]
        for j in range(n):
            if j != pr and aug[j][col] != 0:
                f = aug[j][col]
                aug[j] = [a - f * b for a, b in zip(aug[j], prow)]
    for j in range(n):
        if not used[j] and aug[j][m] != 0:
            return None
    return [aug[pivot_row_of[col]][m] for col in range(m)]


def member(basis: LatticeBasis, vector: Sequence[int]) -> IntVector | None:
    """Integer coefficients of ``vector`` in ``basis``, or None if the vector
    is not a lattice point."""
    v = _as_int_row(vector)
    if len(v) != basis.dim:
        raise DimensionMismatchError(f"vector length {len(v)} does not match dimension {basis.dim}")
    x = _solve_exact(basis.rows, v)
    coeffs = []
    for c in x:
        if c.denominator != 1:
            return None
        coeffs.append(int(c))
    return tuple(coeffs)


def is_basis_of(vectors: Sequence[Sequence[int]], basis: LatticeBasis) -> bool:
    """True iff ``vectors`` is a basis of the lattice generated by ``basis``:
    every vector is a member and the covolumes agree."""
    rows = [_as_int_row(v) for v in vectors]
    if len(rows) != basis.dim:
        raise DimensionMismatchError(
            f"expected {basis.dim} vectors, got {len(rows)}"
        )
    if any(member(basis, v) is None for v in rows):
        return False
    return abs(_bareiss_det(rows)) == abs(basis.det)


def _dot(a, b) -> Rational:
    return sum(x * y for x, y in zip(a, b))


def _gso_rows(rows: Sequence[Sequence[int]]):
    """Exact Gram-Schmidt of independent integer rows.

    Returns (mu, bstar, bstar_sq) as nested lists of Fractions; raises
    StructuralError when the rows are dependent.
    """
    m = len(rows)
    mu: list[list[Fraction]] = []
    bstar: list[list[Fraction]] = []
    bstar_sq: list[Fraction] = []
    for i in range(m):
        v = [Fraction(x) for x in rows[i]]
        murow = [Fraction(0)] * m
        for j in range(m):
            if j < i:
                murow[j] = Fraction(_dot(rows[i], bstar[j])) / bstar_sq[j]
                v = [a - murow[j] * b for a, b in zip(v, bstar[j])]
        murow[i] = Fraction(1)
        sq = _dot(v, v)
        if sq == 0:
            raise StructuralError("rows are linearly dependent")
        mu.append(murow)
        bstar.append(v)
        bstar_sq.append(sq)
    return mu, bstar, bstar_sq


def gso(basis: LatticeBasis) -> GsoData:
    """Exact Gram-Schmidt orthogonalization of the basis rows."""
    mu, bstar, bstar_sq = _gso_rows(basis.rows)
    return GsoData(
        mu=tuple(tuple(r) for r in mu),
        bstar_sq=tuple(bstar_sq),
        bstar=tuple(tuple(r) for r in bstar),
    )


class RankTracker:
    """Incremental rank of a growing set of integer vectors.

    Works fraction-free: stored rows are gcd-normalized integer echelon rows,
    so membership of the next vector costs one reduction pass.  ``pop``
    removes the vector added last, which is what backtracking searches need.
    """

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: list[tuple[int, list[int]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[int]) -> bool:
        """Add ``vec`` if it increases the rank; report whether it did."""
        v = list(vec)
        for pc, row in self._rows:
            if v[pc] != 0:
                a, b = v[pc], row[pc]
                v = [x * b - y * a for x, y in zip(v, row)]
        pivot = next((j for j, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        g = 0
        for x in v:
            g = gcd(g, x)
        if v[pivot] < 0:
            g = -g
        v = [x // g for x in v]
        self._rows.append((pivot, v))
        return True

    def pop(self) -> None:
        self._rows.pop()


def rank_of_rows(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a list of integer vectors."""
    tracker = RankTracker()
    for row in rows:
        tracker.add(row)
    return tracker.rank


def invert_rational(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular square integer matrix."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(1 if j == i else 0) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pr = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pr is None:
            raise StructuralError("matrix is singular")
        a[col], a[pr] = a[pr], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]
