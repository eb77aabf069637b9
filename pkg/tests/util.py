"""Shared helpers for the test suite: seeded random instances and tiny
independent oracles (cofactor determinants, raw coefficient-box scans)."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from stdlattice import LatticeBasis, NormKind, coefficient_box, measure
from stdlattice.errors import StructuralError


def random_basis(rng: random.Random, n: int, lo: int, hi: int) -> LatticeBasis:
    """Uniform integer entries in [lo, hi], resampled until nonsingular."""
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        try:
            return LatticeBasis(rows)
        except StructuralError:
            continue


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    """Product of elementary row operations applied to the identity."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return tuple(tuple(r) for r in m)


def mat_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols))
        for i in range(rows)
    )


def apply_unimodular(u, basis: LatticeBasis) -> LatticeBasis:
    return LatticeBasis(mat_mul(u, basis.rows))


def cofactor_det(mat) -> int:
    """Determinant by Laplace expansion along the first row (independent of
    the library's fraction-free elimination)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * cofactor_det(minor)
    return total


def box_short_vectors(basis: LatticeBasis, kind: NormKind, bound):
    """Sign-canonical short vectors by raw coefficient-box product scan.

    Independent of both the pruned enumerator and the oracle module's own
    nested scan; exists purely to cross-check them.
    """
    m = coefficient_box(basis, kind, bound).per_coeff_bound
    n = basis.dim
    seen = set()
    out = []
    for coeffs in itertools.product(range(-m, m + 1), repeat=n):
        vec = tuple(
            sum(coeffs[i] * basis.rows[i][j] for i in range(n)) for j in range(n)
        )
        if not any(vec):
            continue
        nv = measure(vec, kind)
        if nv.value > bound.value:
            continue
        canon = vec
        for x in canon:
            if x < 0:
                canon = tuple(-y for y in canon)
                break
            if x > 0:
                break
        if canon not in seen:
            seen.add(canon)
            out.append((canon, nv))
    out.sort(key=lambda e: (e[1].value, e[0]))
    return out


def random_rational_vector(rng: random.Random, n: int, span: int = 6, max_den: int = 4):
    return [
        Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))
        for _ in range(n)
    ]


def identity_basis(n: int) -> LatticeBasis:
    return LatticeBasis([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def random_orthogonal_rows_basis(rng: random.Random, n: int, max_entry: int = 5) -> LatticeBasis:
    """Diagonal matrix times a permutation times signs: orthogonal rows."""
    diag = [rng.randint(1, max_entry) for _ in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    rows = []
    for i in range(n):
        sign = rng.choice([-1, 1])
        rows.append([sign * diag[i] if j == perm[i] else 0 for j in range(n)])
    return LatticeBasis(rows)
