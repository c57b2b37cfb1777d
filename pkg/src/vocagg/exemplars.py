"""Partial vocabularies induced from labeled observations.

Agents observe a strictly increasing sequence of exemplars and tag each one
with a word.  What is known of each word is the closed hull of its tagged
observations, extended outward at the two boundary words; everything else
is undetermined and lives in the m "gaps" between consecutive known
extents.  Gaps play the role endpoints play for complete vocabularies:
they are aggregated columnwise by a position rule, and the collective gap
sequence attributes the segments it pins down to words.  As observations
accumulate consistently, gaps contract and attributed extents expand; the
incremental checker verifies exactly that on explicit before/after data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .core import Domain, as_rational
from .errors import (
    DomainMismatch,
    InconsistentLabels,
    MalformedGaps,
    ShapeMismatch,
)
from .rules import PositionVector

GAP_ORDERS: dict[str, Callable[[tuple[Fraction, Fraction]], tuple]] = {
    "lex": lambda gap: (gap[0], gap[1]),
    "right": lambda gap: (gap[1], gap[0]),
    "midpoint": lambda gap: (gap[0] + gap[1], gap[0]),
}


@dataclass(frozen=True)
class LabeledExemplars:
    """One agent's word labels on strictly increasing interior observations.

    ``points`` holds (value, word-index) pairs with 0-based word indices.
    Labels must be nondecreasing along the observations: a larger exemplar
    carrying a smaller word contradicts the left-to-right word order.
    """

    domain: Domain
    points: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        cleaned = tuple((as_rational(e), int(w)) for e, w in self.points)
        object.__setattr__(self, "points", cleaned)
        for e, w in cleaned:
            if not self.domain.contains(e):
                raise ValueError(f"exemplar {e} outside the open domain")
            if w < 0:
                raise ValueError(f"negative word index {w}")
        for (e1, w1), (e2, w2) in zip(cleaned, cleaned[1:]):
            if not e1 < e2:
                raise ValueError(f"exemplars not strictly increasing: {e1}, {e2}")
            if w1 > w2:
                raise InconsistentLabels(
                    f"exemplar {e2} labeled word {w2} after {e1} labeled word {w1}"
                )

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(e for e, _ in self.points)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.points)

    def extended_by(
        self, new_points: Sequence[tuple[Fraction, int]]
    ) -> "LabeledExemplars":
        merged = tuple(sorted(self.points + tuple(new_points)))
        return LabeledExemplars(self.domain, merged)


@dataclass(frozen=True)
class InducedVocabulary:
    """Closed known extents per word; ``None`` where nothing was observed.

    Known extents are hulls [lo, hi] (singletons allowed) and must appear
    in word order without overlapping.  Unlike a complete vocabulary they
    need not tile the domain: the gaps between them are simply unknown.
    """

    domain: Domain
    extents: tuple[Optional[tuple[Fraction, Fraction]], ...]

    def __post_init__(self) -> None:
        cleaned: list[Optional[tuple[Fraction, Fraction]]] = []
        for extent in self.extents:
            if extent is None:
                cleaned.append(None)
                continue
            lo, hi = as_rational(extent[0]), as_rational(extent[1])
            if not lo <= hi:
                raise ValueError(f"hull with {lo} > {hi}")
            if not (self.domain.contains_closed(lo) and self.domain.contains_closed(hi)):
                raise ValueError(f"hull [{lo}, {hi}] outside the closed domain")
            cleaned.append((lo, hi))
        object.__setattr__(self, "extents", tuple(cleaned))
        if not self.extents:
            raise ShapeMismatch("a vocabulary needs at least one word")
        previous: Optional[Fraction] = None
        for extent in self.extents:
            if extent is None:
                continue
            if previous is not None and previous > extent[0]:
                raise ValueError(
                    f"known extents out of order: {previous} > {extent[0]}"
                )
            previous = extent[1]

    @property
    def word_count(self) -> int:
        return len(self.extents)

    @property
    def m(self) -> int:
        return len(self.extents) - 1

    def known_words(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.extents) if e is not None)


@dataclass(frozen=True)
class GapSequence:
    """The m undetermined stretches of an incomplete vocabulary.

    Gap k (1-based) is the open interval between what is known of words
    0..k-1 and of words k..m.  Both the left and the right ends must be
    nondecreasing in k; consecutive gaps may coincide when the words
    between them were never observed.
    """

    domain: Domain
    gaps: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = tuple(
            (as_rational(left), as_rational(right)) for left, right in self.gaps
        )
        object.__setattr__(self, "gaps", cleaned)
        for left, right in cleaned:
            if not (
                self.domain.contains_closed(left)
                and self.domain.contains_closed(right)
            ):
                raise MalformedGaps(f"gap ({left}, {right}) outside the closed domain")
            if left > right:
                raise MalformedGaps(f"gap with {left} > {right}")
        for (l1, r1), (l2, r2) in zip(cleaned, cleaned[1:]):
            if l1 > l2 or r1 > r2:
                raise MalformedGaps(
                    f"gap ends decrease: ({l1}, {r1}) before ({l2}, {r2})"
                )

    @property
    def m(self) -> int:
        return len(self.gaps)


def induce(exemplars: LabeledExemplars, m: int) -> InducedVocabulary:
    """Hulls of the labeled observations over m+1 words.

    Each observed word gets the closed hull of its exemplars.  The first
    and last word reach to the respective domain corner as soon as they are
    observed at all: nothing can sit before word 0 or after word m.
    """
    if m < 1:
        raise ShapeMismatch(f"need at least two words, got m={m}")
    extents: list[Optional[tuple[Fraction, Fraction]]] = [None] * (m + 1)
    for e, w in exemplars.points:
        if w > m:
            raise ShapeMismatch(f"label {w} outside 0..{m}")
        current = extents[w]
        extents[w] = (e, e) if current is None else (current[0], e)
    if extents[0] is not None:
        extents[0] = (exemplars.domain.lower, extents[0][1])
    if extents[m] is not None:
        extents[m] = (extents[m][0], exemplars.domain.upper)
    return InducedVocabulary(exemplars.domain, tuple(extents))


def gaps_of(vocabulary: InducedVocabulary) -> GapSequence:
    """The m gaps of an induced vocabulary, one per word boundary.

    Gap k runs from the top of the last observation among words 0..k-1
    (the lower corner if there is none) to the bottom of the first
    observation among words k..m (the upper corner if there is none).
    """
    domain = vocabulary.domain
    m = vocabulary.m
    gaps = []
    for k in range(1, m + 1):
        left = domain.lower
        for j in range(k - 1, -1, -1):
            extent = vocabulary.extents[j]
            if extent is not None:
                left = extent[1]
                break
        right = domain.upper
        for j in range(k, m + 1):
            extent = vocabulary.extents[j]
            if extent is not None:
                right = extent[0]
                break
        gaps.append((left, right))
    return GapSequence(domain, tuple(gaps))


def aggregate_gaps(
    rows: Sequence[GapSequence],
    positions: PositionVector,
    order: str = "lex",
) -> GapSequence:
    """Columnwise positional selection of gaps under a total order.

    Within one agent, gaps are naturally ordered; across agents they may
    overlap, so a total order must be chosen.  The default compares
    (left, right) lexicographically, which reproduces the intermediate-gap
    reading of the worked examples; ``right`` and ``midpoint`` orders are
    available as alternatives.  If the columnwise selections fail to be
    nondecreasing, ``MalformedGaps`` surfaces with the offending pair.
    """
    if not rows:
        raise ShapeMismatch("no gap rows to aggregate")
    try:
        key = GAP_ORDERS[order]
    except KeyError:
        raise ShapeMismatch(
            f"unknown gap order {order!r}; choose from {sorted(GAP_ORDERS)}"
        ) from None
    domain = rows[0].domain
    m = rows[0].m
    for row in rows[1:]:
        if row.domain != domain:
            raise DomainMismatch("gap rows over different domains")
        if row.m != m:
            raise ShapeMismatch(f"gap rows of mixed length: {row.m} != {m}")
    if positions.m != m:
        raise ShapeMismatch(f"{positions.m} positions for {m} gap columns")
    positions.validate_for(len(rows))
    selected = []
    for k in range(1, m + 1):
        column = sorted((row.gaps[k - 1] for row in rows), key=key)
        selected.append(column[positions.positions[k - 1] - 1])
    return GapSequence(domain, tuple(selected))


def collective_incomplete(gaps: GapSequence) -> InducedVocabulary:
    """Attribute to words the segments a gap sequence leaves determined.

    Everything up to gap 1 belongs to word 0 and everything after gap m to
    word m.  A segment strictly between two distinct consecutive gaps
    belongs to the word they bound; coincident gaps determine nothing for
    that word.  Segments that collapse onto a domain corner are empty and
    attribute nothing.
    """
    domain = gaps.domain
    m = gaps.m

    def segment(lo: Fraction, hi: Fraction) -> Optional[tuple[Fraction, Fraction]]:
        if lo > hi:
            return None
        if lo == hi and not domain.contains(lo):
            return None
        return (lo, hi)

    extents: list[Optional[tuple[Fraction, Fraction]]] = []
    first_left = gaps.gaps[0][0]
    extents.append(segment(domain.lower, first_left) if first_left > domain.lower else None)
    for j in range(1, m):
        left_gap, right_gap = gaps.gaps[j - 1], gaps.gaps[j]
        if left_gap == right_gap:
            extents.append(None)
            continue
        extents.append(segment(left_gap[1], right_gap[0]))
    last_right = gaps.gaps[m - 1][1]
    extents.append(segment(last_right, domain.upper) if last_right < domain.upper else None)
    return InducedVocabulary(domain, tuple(extents))


@dataclass(frozen=True)
class IncrementalReport:
    """Outcome of one before/after monotonicity check of the gap pipeline."""

    holds: bool
    before_gaps: GapSequence
    after_gaps: GapSequence
    before_vocabulary: InducedVocabulary
    after_vocabulary: InducedVocabulary
    failures: tuple[str, ...]


def check_incremental_consistency(
    before: Sequence[LabeledExemplars],
    after: Sequence[LabeledExemplars],
    positions: PositionVector,
    order: str = "lex",
) -> IncrementalReport:
    """New consistent observations may only contract gaps and extend words.

    Precondition: ``after`` extends ``before`` agent by agent, keeping every
    old observation with its old label; anything else (dropped points,
    relabelings) raises ``InconsistentLabels`` rather than producing a
    verdict.  The check then runs the whole pipeline on both stages and
    compares: each collective gap must be contained in its predecessor and
    each attributed extent must contain its predecessor.
    """
    if len(before) != len(after):
        raise ShapeMismatch(
            f"{len(before)} agents before, {len(after)} after"
        )
    if not before:
        raise ShapeMismatch("no agents")
    for i, (old, new) in enumerate(zip(before, after), start=1):
        if old.domain != new.domain:
            raise DomainMismatch(f"agent {i} changed domain")
        if not set(old.points) <= set(new.points):
            raise InconsistentLabels(
                f"agent {i} dropped or relabeled an old exemplar"
            )
    m = positions.m
    before_gaps = aggregate_gaps(
        [gaps_of(induce(ex, m)) for ex in before], positions, order
    )
    after_gaps = aggregate_gaps(
        [gaps_of(induce(ex, m)) for ex in after], positions, order
    )
    before_vocabulary = collective_incomplete(before_gaps)
    after_vocabulary = collective_incomplete(after_gaps)
    failures = []
    for k in range(1, m + 1):
        old_left, old_right = before_gaps.gaps[k - 1]
        new_left, new_right = after_gaps.gaps[k - 1]
        if not (old_left <= new_left and new_right <= old_right):
            failures.append(
                f"gap {k} grew: ({old_left}, {old_right}) to ({new_left}, {new_right})"
            )
    for j in range(m + 1):
        old_extent = before_vocabulary.extents[j]
        new_extent = after_vocabulary.extents[j]
        if old_extent is None:
            continue
        if new_extent is None or not (
            new_extent[0] <= old_extent[0] and old_extent[1] <= new_extent[1]
        ):
            failures.append(
                f"word {j} shrank: {old_extent} to {new_extent}"
            )
    return IncrementalReport(
        holds=not failures,
        before_gaps=before_gaps,
        after_gaps=after_gaps,
        before_vocabulary=before_vocabulary,
        after_vocabulary=after_vocabulary,
        failures=tuple(failures),
    )
