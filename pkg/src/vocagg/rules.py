"""Aggregation rules mapping endpoint profiles to collective endpoints.

Every rule here works columnwise on exact rationals.  The workhorse family
selects a fixed order statistic per column (``PRule``); the extended-median
family pads each column with n-1 fixed phantom values before taking the
median and strictly generalizes it.  The mean, the one-agent dictatorship,
and the pooled-multiset rule are kept as contrasts: each fails at least one
of the properties the order-statistic families satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Domain, EndpointMultiset, Profile, as_rational
from .errors import (
    DomainMismatch,
    EvenAgentCount,
    IndexOutOfRange,
    ParityViolation,
    ShapeMismatch,
)


def order_statistic(values: Sequence[Fraction], k: int) -> Fraction:
    """The k-th smallest element, counted with multiplicity, k in 1..len."""
    if not 1 <= k <= len(values):
        raise IndexOutOfRange(f"rank {k} outside 1..{len(values)}")
    return sorted(values)[k - 1]


@dataclass(frozen=True)
class PositionVector:
    """Nondecreasing 1-based ranks, one per word boundary.

    A vector p with 1 <= p_1 <= ... <= p_m picks the p_k-th smallest report
    in column k.  The upper bound p_m <= n depends on the profile and is
    checked by ``validate_for``.
    """

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        if not self.positions:
            raise ShapeMismatch("a position vector needs at least one entry")
        if self.positions[0] < 1:
            raise ValueError(f"positions are 1-based, got {self.positions[0]}")
        for a, b in zip(self.positions, self.positions[1:]):
            if a > b:
                raise ValueError(f"positions not nondecreasing: {a} > {b}")

    @property
    def m(self) -> int:
        return len(self.positions)

    def validate_for(self, n: int) -> None:
        if self.positions[-1] > n:
            raise IndexOutOfRange(
                f"position {self.positions[-1]} exceeds agent count {n}"
            )


@dataclass(frozen=True)
class PhantomMatrix:
    """n-1 fixed phantom values per column, nondecreasing in both directions.

    Column k is merged with the n agent reports for boundary k before taking
    the median of the 2n-1 values.  Within a column the phantoms are sorted;
    across columns they must not decrease, which keeps the collective output
    weakly consistent.  Phantoms may sit exactly on the domain corners.
    """

    domain: Domain
    columns: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        coerced = tuple(
            tuple(as_rational(q) for q in column) for column in self.columns
        )
        object.__setattr__(self, "columns", coerced)
        if not coerced:
            raise ShapeMismatch("a phantom matrix needs at least one column")
        size = len(coerced[0])
        for column in coerced:
            if len(column) != size:
                raise ShapeMismatch("ragged phantom columns")
            for q in column:
                if not self.domain.contains_closed(q):
                    raise ValueError(f"phantom {q} outside the closed domain")
            for a, b in zip(column, column[1:]):
                if a > b:
                    raise ValueError(f"phantom column not sorted: {a} > {b}")
        for left, right in zip(coerced, coerced[1:]):
            for a, b in zip(left, right):
                if a > b:
                    raise ValueError(
                        f"phantoms decrease across columns: {a} > {b}"
                    )

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def n(self) -> int:
        return len(self.columns[0]) + 1


class Rule:
    """Marker base class for aggregation rule descriptions."""


@dataclass(frozen=True)
class PRule(Rule):
    """Select the p_k-th smallest report in column k."""

    positions: PositionVector

    def __post_init__(self) -> None:
        if not isinstance(self.positions, PositionVector):
            object.__setattr__(self, "positions", PositionVector(tuple(self.positions)))


@dataclass(frozen=True)
class ExtendedMedianRule(Rule):
    """Columnwise median of the reports pooled with fixed phantoms."""

    phantoms: PhantomMatrix


@dataclass(frozen=True)
class MeanRule(Rule):
    """Columnwise arithmetic mean, kept exact as a rational."""


@dataclass(frozen=True)
class MultisetRule(Rule):
    """Pool all n*m endpoints, split into m runs of n, take each run's median."""


@dataclass(frozen=True)
class DictatorRule(Rule):
    """Return agent i's report unchanged, i in 1..n."""

    agent: int


def median_positions(n: int, m: int) -> PositionVector:
    """The self-dual position vector built from the two middle ranks.

    The first half of the boundaries takes the lower median rank
    floor((n+1)/2) and the second half the upper median rank ceil((n+1)/2).
    With an odd number of boundaries the middle one would need both, so
    that case is only defined when the two ranks coincide, i.e. for an odd
    number of agents; otherwise ``ParityViolation`` is raised.
    """
    if n < 1 or m < 1:
        raise ShapeMismatch(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if m % 2 == 1 and n % 2 == 0:
        raise ParityViolation(
            f"no median position vector for m={m} boundaries with n={n} agents"
        )
    low, high = (n + 1) // 2, n // 2 + 1
    return PositionVector(
        tuple(low if k <= (m + 1) // 2 else high for k in range(1, m + 1))
    )


def is_symmetric(positions: PositionVector, n: int) -> bool:
    """True iff p_k + p_(m-k+1) = n + 1 for every k.

    Symmetric vectors treat the two reading directions of the line evenly;
    they are exactly the ones whose rule commutes with order reversal.
    """
    positions.validate_for(n)
    p = positions.positions
    return all(p[k] + p[len(p) - 1 - k] == n + 1 for k in range(len(p)))


def apply_p_rule(profile: Profile, positions: PositionVector) -> EndpointMultiset:
    if positions.m != profile.m:
        raise ShapeMismatch(
            f"{positions.m} positions for {profile.m} word boundaries"
        )
    positions.validate_for(profile.n)
    values = tuple(
        order_statistic(profile.column(k), positions.positions[k - 1])
        for k in range(1, profile.m + 1)
    )
    return EndpointMultiset(profile.domain, values)


def apply_p_rule_reversed(
    profile: Profile, positions: PositionVector
) -> tuple[Fraction, ...]:
    """Evaluate a position rule reading the line from above.

    Under the reversed order the k-th boundary is the old (m-k+1)-th one and
    "p_k-th smallest" means p_k-th largest.  The result is returned as the
    nonincreasing tuple seen from the reversed viewpoint.  For a symmetric
    vector, reading it back left-to-right recovers the ordinary evaluation.
    """
    if positions.m != profile.m:
        raise ShapeMismatch(
            f"{positions.m} positions for {profile.m} word boundaries"
        )
    positions.validate_for(profile.n)
    m = profile.m
    out = []
    for k in range(1, m + 1):
        column = profile.column(m - k + 1)
        out.append(order_statistic(column, len(column) + 1 - positions.positions[k - 1]))
    return tuple(out)


def apply_mean(profile: Profile) -> EndpointMultiset:
    values = tuple(
        sum(profile.column(k), Fraction(0)) / profile.n
        for k in range(1, profile.m + 1)
    )
    return EndpointMultiset(profile.domain, values)


def apply_dictator(profile: Profile, agent: int) -> EndpointMultiset:
    if not 1 <= agent <= profile.n:
        raise IndexOutOfRange(f"dictator index {agent} outside 1..{profile.n}")
    return profile.row(agent)


def apply_multiset_rule(profile: Profile) -> EndpointMultiset:
    """Sort all n*m endpoints jointly, then take the median of each run of n."""
    if profile.n % 2 == 0:
        raise EvenAgentCount(f"pooled-multiset rule needs odd n, got {profile.n}")
    pooled = sorted(v for row in profile.rows for v in row.values)
    n = profile.n
    values = tuple(
        pooled[(k - 1) * n + (n - 1) // 2] for k in range(1, profile.m + 1)
    )
    return EndpointMultiset(profile.domain, values)


def extended_median(
    column: Sequence[Fraction], phantoms: Sequence[Fraction]
) -> Fraction:
    """Median of n reports pooled with n-1 phantoms (always an odd count)."""
    if len(phantoms) != len(column) - 1:
        raise ShapeMismatch(
            f"{len(phantoms)} phantoms for {len(column)} reports; need n-1"
        )
    pooled = sorted(list(column) + list(phantoms))
    return pooled[len(column) - 1]


def apply_extended_median(
    profile: Profile, phantoms: PhantomMatrix
) -> EndpointMultiset:
    if phantoms.m != profile.m:
        raise ShapeMismatch(
            f"phantom matrix with {phantoms.m} columns for m={profile.m}"
        )
    if phantoms.n != profile.n:
        raise ShapeMismatch(
            f"phantom matrix sized for n={phantoms.n}, profile has n={profile.n}"
        )
    if phantoms.domain != profile.domain:
        raise DomainMismatch("phantom matrix over a different domain")
    values = tuple(
        extended_median(profile.column(k), phantoms.columns[k - 1])
        for k in range(1, profile.m + 1)
    )
    return EndpointMultiset(profile.domain, values)


def boundary_phantoms(
    positions: PositionVector, n: int, domain: Domain
) -> PhantomMatrix:
    """The phantom matrix that replays a position rule.

    Column k holds n - p_k copies of the lower corner followed by p_k - 1
    copies of the upper corner, which forces the pooled median onto the
    p_k-th smallest report.
    """
    positions.validate_for(n)
    columns = tuple(
        (domain.lower,) * (n - p) + (domain.upper,) * (p - 1)
        for p in positions.positions
    )
    return PhantomMatrix(domain, columns)


def apply_rule(profile: Profile, rule: Rule) -> EndpointMultiset:
    """Validate shapes, then evaluate ``rule`` on ``profile``."""
    if isinstance(rule, PRule):
        return apply_p_rule(profile, rule.positions)
    if isinstance(rule, ExtendedMedianRule):
        return apply_extended_median(profile, rule.phantoms)
    if isinstance(rule, MeanRule):
        return apply_mean(profile)
    if isinstance(rule, MultisetRule):
        return apply_multiset_rule(profile)
    if isinstance(rule, DictatorRule):
        return apply_dictator(profile, rule.agent)
    raise ShapeMismatch(f"not an aggregation rule: {rule!r}")
