"""Exact domain model for vocabularies over a bounded open interval.

A vocabulary splits an interval X = (lower, upper) into consecutive word
extents.  With m+1 words there are m inner boundaries, and any vocabulary
with at least two active words is identified by the nondecreasing multiset
of those boundaries: a repeated value stands for a word with empty extent,
and the improper values ``lower``/``upper`` stand for inactive words at the
ends.  All values are `fractions.Fraction`, so comparisons and ties are
exact and runs are reproducible bit for bit.

Conventions used throughout the package:

* word indices are 0-based: word ``j`` (j = 0..m) spans ``[s^j, s^(j+1))``
  where ``s^0 = lower`` and ``s^(m+1) = upper``;
* every extent contains its left boundary except the first active one,
  which is open at ``lower`` because the domain itself is open;
* agent indices and order-statistic ranks are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainMismatch, InvalidVocabulary, ParseError, ShapeMismatch

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts Fraction, int, and strings such as ``"3/7"`` or ``"48.33"``
    (decimal strings expand exactly, e.g. 48.33 becomes 4833/100).  Binary
    floats are rejected: they would smuggle rounding into an exact model.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            f"refusing float {value!r}: pass a string or Fraction for exact input"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational numeral: {value!r}") from exc
    raise ParseError(f"not a rational value: {value!r}")


@dataclass(frozen=True)
class Domain:
    """The open interval X = (lower, upper) that every vocabulary partitions."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", as_rational(self.lower))
        object.__setattr__(self, "upper", as_rational(self.upper))
        if not self.lower < self.upper:
            raise ValueError(f"empty domain: ({self.lower}, {self.upper})")

    @classmethod
    def unit(cls) -> "Domain":
        return cls(Fraction(0), Fraction(1))

    def contains(self, x: Fraction) -> bool:
        """Membership in the open interval X."""
        return self.lower < x < self.upper

    def contains_closed(self, x: Fraction) -> bool:
        """Membership in the closure of X, where improper endpoints live."""
        return self.lower <= x <= self.upper

    def reflect(self, x: Fraction) -> Fraction:
        """The order-reversing bijection x -> lower + upper - x."""
        return self.lower + self.upper - x


@dataclass(frozen=True)
class EndpointMultiset:
    """A nondecreasing tuple of m word boundaries inside the closure of X.

    This is one agent's report: the boundary between word j-1 and word j
    sits at ``values[j-1]``.  ``bound(k)`` pads the tuple with the domain
    corners so that ``bound(0) = lower`` and ``bound(m+1) = upper``.
    """

    domain: Domain
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coerced = tuple(as_rational(v) for v in self.values)
        object.__setattr__(self, "values", coerced)
        for v in coerced:
            if not self.domain.contains_closed(v):
                raise ValueError(f"endpoint {v} outside [{self.domain.lower}, {self.domain.upper}]")
        for a, b in zip(coerced, coerced[1:]):
            if a > b:
                raise ValueError(f"endpoints not sorted: {a} > {b}")

    @property
    def m(self) -> int:
        return len(self.values)

    def bound(self, k: int) -> Fraction:
        """The k-th boundary for k in 0..m+1, with corners at both ends."""
        if k == 0:
            return self.domain.lower
        if k == self.m + 1:
            return self.domain.upper
        if 1 <= k <= self.m:
            return self.values[k - 1]
        raise IndexError(f"boundary index {k} outside 0..{self.m + 1}")

    def active_words(self) -> tuple[int, ...]:
        """0-based indices j with a nonempty extent [bound(j), bound(j+1))."""
        return tuple(j for j in range(self.m + 1) if self.bound(j) < self.bound(j + 1))

    @property
    def strictly_increasing_interior(self) -> bool:
        """True iff all values are interior and strictly increasing.

        Equivalent to all m+1 words being active.
        """
        padded = (self.domain.lower,) + self.values + (self.domain.upper,)
        return all(a < b for a, b in zip(padded, padded[1:]))


@dataclass(frozen=True)
class Vocabulary:
    """A labeled interval partition: one optional extent per word.

    ``extents[j]`` is ``(left, right)`` for an active word and ``None`` for
    an inactive one.  Active extents must tile X in word order.  A single
    active word is representable (``degenerate`` is then true) but cannot
    be encoded as an endpoint multiset.
    """

    domain: Domain
    extents: tuple[Optional[tuple[Fraction, Fraction]], ...]

    def __post_init__(self) -> None:
        cleaned = []
        for extent in self.extents:
            if extent is None:
                cleaned.append(None)
                continue
            left, right = extent
            cleaned.append((as_rational(left), as_rational(right)))
        object.__setattr__(self, "extents", tuple(cleaned))
        active = [(j, e) for j, e in enumerate(self.extents) if e is not None]
        if not active:
            raise InvalidVocabulary("no active word")
        cursor = self.domain.lower
        for _, (left, right) in active:
            if left != cursor:
                raise InvalidVocabulary(
                    f"extent [{left}, {right}) does not continue the tiling at {cursor}"
                )
            if not left < right:
                raise InvalidVocabulary(f"empty extent [{left}, {right})")
            cursor = right
        if cursor != self.domain.upper:
            raise InvalidVocabulary(f"tiling stops at {cursor}, not {self.domain.upper}")

    @property
    def word_count(self) -> int:
        return len(self.extents)

    @property
    def m(self) -> int:
        return len(self.extents) - 1

    def active_words(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.extents) if e is not None)

    @property
    def degenerate(self) -> bool:
        """True when only one word is active; such vocabularies carry no boundary."""
        return len(self.active_words()) < 2


@dataclass(frozen=True)
class Profile:
    """One endpoint multiset per agent, all over the same domain and word count."""

    rows: tuple[EndpointMultiset, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ShapeMismatch("a profile needs at least one agent")
        first = self.rows[0]
        for row in self.rows[1:]:
            if row.domain != first.domain:
                raise DomainMismatch("profile rows over different domains")
            if row.m != first.m:
                raise ShapeMismatch(f"profile rows of mixed length: {row.m} != {first.m}")

    @classmethod
    def from_rows(
        cls, domain: Domain, rows: Iterable[Sequence[RationalLike]]
    ) -> "Profile":
        return cls(tuple(EndpointMultiset(domain, tuple(row)) for row in rows))

    @property
    def domain(self) -> Domain:
        return self.rows[0].domain

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self.rows[0].m

    def row(self, i: int) -> EndpointMultiset:
        """Agent i's report, i in 1..n."""
        if not 1 <= i <= self.n:
            raise ShapeMismatch(f"agent index {i} outside 1..{self.n}")
        return self.rows[i - 1]

    def column(self, k: int) -> tuple[Fraction, ...]:
        """All agents' k-th endpoints, k in 1..m, in agent order."""
        if not 1 <= k <= self.m:
            raise ShapeMismatch(f"column index {k} outside 1..{self.m}")
        return tuple(row.values[k - 1] for row in self.rows)

    def with_row(self, i: int, row: EndpointMultiset) -> "Profile":
        """The profile with agent i's report replaced (a unilateral deviation)."""
        if not 1 <= i <= self.n:
            raise ShapeMismatch(f"agent index {i} outside 1..{self.n}")
        if row.domain != self.domain:
            raise DomainMismatch("replacement row over a different domain")
        if row.m != self.m:
            raise ShapeMismatch(f"replacement row of length {row.m}, expected {self.m}")
        rows = list(self.rows)
        rows[i - 1] = row
        return Profile(tuple(rows))

    def values(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(row.values for row in self.rows)


def encode_vocabulary(vocabulary: Vocabulary) -> EndpointMultiset:
    """The endpoint multiset of a vocabulary with at least two active words.

    Boundary k (k = 1..m) separates words 0..k-1 from words k..m and equals
    the right end of the last active extent among words 0..k-1, or ``lower``
    when none of them is active.  Inactive words between active extents thus
    contribute an extra copy of the shared boundary, and inactive words at
    the ends contribute copies of the corners.
    """
    if vocabulary.degenerate:
        raise InvalidVocabulary("one active word carries no boundary information")
    values = []
    reach = vocabulary.domain.lower
    for j in range(vocabulary.m):
        extent = vocabulary.extents[j]
        if extent is not None:
            reach = extent[1]
        values.append(reach)
    return EndpointMultiset(vocabulary.domain, tuple(values))


def decode_endpoints(endpoints: EndpointMultiset) -> Vocabulary:
    """The vocabulary whose word j spans [bound(j), bound(j+1)).

    Words with coinciding boundaries come back inactive.  A multiset all of
    whose values sit at one corner decodes to a single active word; the
    result is then flagged ``degenerate`` and cannot be re-encoded.
    """
    extents: list[Optional[tuple[Fraction, Fraction]]] = []
    for j in range(endpoints.m + 1):
        left, right = endpoints.bound(j), endpoints.bound(j + 1)
        extents.append((left, right) if left < right else None)
    return Vocabulary(endpoints.domain, tuple(extents))


def between(x: Fraction, y: Fraction, z: Fraction) -> bool:
    """True iff y lies weakly between x and z (in either order)."""
    return x <= y <= z or z <= y <= x


def profile_between(
    first: EndpointMultiset, middle: EndpointMultiset, last: EndpointMultiset
) -> bool:
    """Componentwise betweenness of three reports of equal shape."""
    if not (first.m == middle.m == last.m):
        raise ShapeMismatch(
            f"betweenness over mixed lengths: {first.m}, {middle.m}, {last.m}"
        )
    if not (first.domain == middle.domain == last.domain):
        raise DomainMismatch("betweenness over mixed domains")
    return all(
        between(a, b, c)
        for a, b, c in zip(first.values, middle.values, last.values)
    )
