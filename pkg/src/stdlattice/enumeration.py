"""Exhaustive short-vector enumeration and successive minima with witnesses.

The enumerator is a depth-first search over basis coefficients driven by the
exact Gram-Schmidt data: partial squared-L2 sums prune against the L2 radius
that dominates the requested norm, and survivors are filtered by the exact
target norm.  Output lists are sign-canonical (first nonzero ambient
coordinate positive) and sorted by (norm, lexicographic coordinates), which
makes every downstream certificate deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .errors import ResourceLimitError
from .exactlin import IntVector, LatticeBasis, RankTracker, _gso_rows
from .norms import NormKind, NormValue, double_radius, enumeration_radius_in_l2, measure

DEFAULT_MAX_CANDIDATES = 10_000_000
DEFAULT_MAX_DIM = 12


class MeasuredVector(NamedTuple):
    vector: IntVector
    norm: NormValue


@dataclass(frozen=True)
class ShortVectorList:
    """Every nonzero lattice vector with norm <= bound, up to sign.

    Exactly one of v, -v appears; the kept representative has its first
    nonzero coordinate positive.  Entries are sorted by (norm, coordinates).
    """

    kind: NormKind
    bound: NormValue
    entries: tuple[MeasuredVector, ...]

    @property
    def vectors(self) -> tuple[IntVector, ...]:
        return tuple(e.vector for e in self.entries)


@dataclass(frozen=True)
class SuccessiveMinima:
    """The n sorted minima under ``kind`` with independent witness vectors."""

    kind: NormKind
    minima: tuple[NormValue, ...]
    witnesses: tuple[IntVector, ...]


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _check_dim(dim: int, max_dim: int) -> None:
    if dim > max_dim:
        raise ResourceLimitError(f"dimension {dim} exceeds the configured cap {max_dim}")


def _canonical_sign(vec: tuple[int, ...]) -> tuple[int, ...]:
    for x in vec:
        if x > 0:
            return vec
        if x < 0:
            return tuple(-y for y in vec)
    return vec


def _enumerate_rows(
    rows: Sequence[IntVector],
    kind: NormKind,
    bound: NormValue,
    max_candidates: int,
) -> list[MeasuredVector]:
    m = len(rows)
    n = len(rows[0])
    mu, _, bstar_sq = _gso_rows(rows)
    r2 = Fraction(enumeration_radius_in_l2(bound, n).value)
    limit = bound.value

    # The pruning condition sum_l (x_l - c_l)^2 ||b*_l||^2 <= R^2 is evaluated
    # in scaled integers: with D a common denominator of the mu entries and E
    # one of the squared star lengths, every term times D^2 E is integral, so
    # the whole walk runs on exact machine integers.
    den = 1
    for i in range(m):
        for j in range(i):
            den = den * mu[i][j].denominator // gcd(den, mu[i][j].denominator)
    sq_den = 1
    for sq in bstar_sq:
        sq_den = sq_den * sq.denominator // gcd(sq_den, sq.denominator)
    mu_scaled = [[int(mu[i][j] * den) for j in range(i)] for i in range(m)]
    bsq_scaled = [int(sq * sq_den) for sq in bstar_sq]
    # S_scaled <= R^2 * D^2 * E  <=>  S_scaled * rd <= rn * D^2 * E.
    cap = r2.numerator * den * den * sq_den
    rd = r2.denominator

    found: list[MeasuredVector] = []
    x = [0] * m
    work = 0

    def emit() -> None:
        vec = tuple(sum(x[i] * rows[i][j] for i in range(m) if x[i]) for j in range(n))
        nv = measure(vec, kind)
        if 0 < nv.value <= limit:
            found.append(MeasuredVector(_canonical_sign(vec), nv))

    def descend(level: int, partial: int, zero_prefix: bool) -> None:
        nonlocal work
        center = -sum(x[i] * mu_scaled[i][level] for i in range(level + 1, m))
        bsq = bsq_scaled[level]

        def step(xi: int) -> bool:
            nonlocal work
            work += 1
            if work > max_candidates:
                raise ResourceLimitError(
                    f"enumeration exceeded {max_candidates} candidate evaluations"
                )
            t = xi * den - center
            total = partial + t * t * bsq
            if total * rd > cap:
                return False
            x[level] = xi
            if level == 0:
                if not (zero_prefix and xi == 0):
                    emit()
            else:
                descend(level - 1, total, zero_prefix and xi == 0)
            return True

        # Nearest integer to center/den; a tie can fall either way, both
        # tied values lie inside the interval whenever any integer does.
        start = (2 * center + den) // (2 * den)
        if zero_prefix:
            # Mirror coefficient vectors are redundant: once the prefix is all
            # zeros the negative branch is the mirror of the positive one.
            xi = 0
            while step(xi):
                xi += 1
        else:
            xi = start
            while step(xi):
                xi += 1
            xi = start - 1
            while step(xi):
                xi -= 1

    descend(m - 1, 0, True)
    found.sort(key=lambda e: (e.norm.value, e.vector))
    return found


def enumerate_short(
    basis: LatticeBasis,
    kind: NormKind,
    bound: NormValue,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    max_dim: int = DEFAULT_MAX_DIM,
) -> ShortVectorList:
    """All nonzero lattice vectors with norm at most ``bound``, up to sign."""
    if bound.kind is not kind:
        raise ValueError(f"bound kind {bound.kind.value} does not match requested {kind.value}")
    if bound.value <= 0:
        raise ValueError("enumeration bound must be positive")
    _check_dim(basis.dim, max_dim)
    entries = _enumerate_rows(basis.rows, kind, bound, max_candidates)
    return ShortVectorList(kind=kind, bound=bound, entries=tuple(entries))


def _greedy_minima(
    entries: Sequence[MeasuredVector], want: int
) -> tuple[list[NormValue], list[IntVector]]:
    """Scan a sorted enumeration, keeping each vector that grows the rank."""
    tracker = RankTracker()
    minima: list[NormValue] = []
    witnesses: list[IntVector] = []
    for vec, nv in entries:
        if tracker.add(vec):
            minima.append(nv)
            witnesses.append(vec)
            if len(witnesses) == want:
                break
    return minima, witnesses


def _minima_rows(
    rows: Sequence[IntVector],
    kind: NormKind,
    *,
    start_bound: NormValue | None = None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SuccessiveMinima:
    m = len(rows)
    if start_bound is None:
        bound = NormValue(kind, max(measure(r, kind).value for r in rows))
    else:
        bound = start_bound
    while True:
        entries = _enumerate_rows(rows, kind, bound, max_candidates)
        minima, witnesses = _greedy_minima(entries, m)
        if len(witnesses) == m:
            return SuccessiveMinima(kind, tuple(minima), tuple(witnesses))
        # The basis rows themselves lie within the max-row-norm bound, so the
        # first pass normally already has rank m; doubling is a safety net.
        bound = double_radius(bound)


def successive_minima(
    basis: LatticeBasis,
    kind: NormKind,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    max_dim: int = DEFAULT_MAX_DIM,
) -> SuccessiveMinima:
    """Exact successive minima with a deterministic greedy witness set.

    The witnesses are read off the sorted enumeration: a vector is kept iff
    it increases the rank of the kept set, so the i-th kept norm is the i-th
    minimum.  The search radius starts at the largest row norm and doubles
    until the witnesses span everything.
    """
    _check_dim(basis.dim, max_dim)
    return _minima_rows(basis.rows, kind, max_candidates=max_candidates)


def minima_witness_check(
    basis: LatticeBasis,
    sm: SuccessiveMinima,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    max_dim: int = DEFAULT_MAX_DIM,
) -> CheckResult:
    """Independent verification of a SuccessiveMinima certificate.

    Re-checks membership, norms, independence, ordering, and minimality
    against a fresh enumeration; returns ok=False with diagnostics instead of
    raising.
    """
    from .exactlin import member, rank_of_rows

    problems: list[str] = []
    n = basis.dim
    if len(sm.minima) != n or len(sm.witnesses) != n:
        problems.append(f"expected {n} minima and witnesses, got {len(sm.minima)}/{len(sm.witnesses)}")
        return CheckResult(False, tuple(problems))
    for i, nv in enumerate(sm.minima):
        if nv.kind is not sm.kind:
            problems.append(f"minimum {i + 1} has kind {nv.kind.value}, expected {sm.kind.value}")
    for i in range(1, n):
        if sm.minima[i].value < sm.minima[i - 1].value:
            problems.append(f"minima are not nondecreasing at position {i + 1}")
    for i, w in enumerate(sm.witnesses):
        if len(w) != n:
            problems.append(f"witness {i + 1} has wrong length")
            return CheckResult(False, tuple(problems))
        if member(basis, w) is None:
            problems.append(f"witness {i + 1} is not a lattice point")
        got = measure(w, sm.kind)
        if got.value != sm.minima[i].value:
            problems.append(
                f"witness {i + 1} has norm {got.value}, certificate says {sm.minima[i].value}"
            )
    if rank_of_rows(sm.witnesses) != n:
        problems.append("witnesses are linearly dependent")
    if not problems:
        fresh = _minima_rows(basis.rows, sm.kind, max_candidates=max_candidates)
        for i in range(n):
            if fresh.minima[i].value != sm.minima[i].value:
                problems.append(
                    f"minimum {i + 1} should be {fresh.minima[i].value}, certificate says "
                    f"{sm.minima[i].value}"
                )
    return CheckResult(not problems, tuple(problems))
