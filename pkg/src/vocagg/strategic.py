"""Incentive checks for aggregation rules under single-peaked preferences.

An agent's preference is additive: the peak is their sincere report and the
disutility of a collective output is a positively weighted L1 distance to
that peak.  ``sp_fuzz`` hunts for profitable misreports; a returned witness
always replays exactly.  ``check_uncompromising`` tests the bracketing
property that characterizes the deviation-proof rules: a unilateral change
either leaves the output alone or moves it so that both outputs stay
between the mover's old and new positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .axioms import HOLDS, VIOLATED, AxiomReport, RuleLike, as_evaluator
from .core import Domain, EndpointMultiset, Profile, between
from .errors import DomainMismatch, ShapeMismatch
from .rules import DictatorRule, ExtendedMedianRule, MultisetRule, PRule
from .sampling import random_profile, random_weights, sorted_between, spawn


@dataclass(frozen=True)
class SinglePeakedPreference:
    """Weighted L1 disutility around a most-preferred endpoint multiset."""

    peak: EndpointMultiset
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if len(self.weights) != self.peak.m:
            raise ShapeMismatch(
                f"{len(self.weights)} weights for {self.peak.m} boundaries"
            )
        for w in self.weights:
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")


def utility(
    preference: SinglePeakedPreference, endpoints: EndpointMultiset
) -> Fraction:
    """Negative weighted L1 distance from the peak; higher is better."""
    if endpoints.m != preference.peak.m:
        raise ShapeMismatch(
            f"utility of {endpoints.m} boundaries under a peak with {preference.peak.m}"
        )
    if endpoints.domain != preference.peak.domain:
        raise DomainMismatch("utility across different domains")
    return -sum(
        w * abs(v - p)
        for w, v, p in zip(preference.weights, endpoints.values, preference.peak.values)
    )


@dataclass(frozen=True)
class ManipulationWitness:
    """A profitable misreport, stored with everything needed to replay it."""

    agent: int
    preference: SinglePeakedPreference
    profile: Profile
    misreport: EndpointMultiset
    truthful_outcome: EndpointMultiset
    manipulated_outcome: EndpointMultiset
    gain: Fraction

    def replay(self, rule: RuleLike) -> Fraction:
        """Recompute the gain from scratch; must reproduce ``gain`` exactly."""
        evaluator = as_evaluator(rule)
        truthful = evaluator(self.profile)
        manipulated = evaluator(self.profile.with_row(self.agent, self.misreport))
        if truthful != self.truthful_outcome or manipulated != self.manipulated_outcome:
            raise AssertionError("witness outcomes do not replay")
        return utility(self.preference, manipulated) - utility(self.preference, truthful)


@dataclass(frozen=True)
class UncompromisingVerdict:
    """Outcome of one unilateral-deviation bracketing check."""

    case: str  # "unchanged" | "bracketed" | "violated"
    boundary: int
    outcome: EndpointMultiset
    deviated_outcome: EndpointMultiset


def check_uncompromising(
    rule: RuleLike,
    profile: Profile,
    agent: int,
    deviation: EndpointMultiset,
    boundary: int,
) -> UncompromisingVerdict:
    """Test the bracketing property at one boundary for one deviation.

    With f the outcome and f' the outcome after agent ``agent`` switches to
    ``deviation``, the property asks for (a) f' = f, or both (b) f^k lies
    between the agent's old position and f'^k and (c) f'^k lies between the
    agent's new position and f^k.
    """
    if not 1 <= boundary <= profile.m:
        raise ShapeMismatch(f"boundary {boundary} outside 1..{profile.m}")
    evaluator = as_evaluator(rule)
    outcome = evaluator(profile)
    deviated_outcome = evaluator(profile.with_row(agent, deviation))
    if outcome == deviated_outcome:
        return UncompromisingVerdict("unchanged", boundary, outcome, deviated_outcome)
    k = boundary
    old_position = profile.row(agent).values[k - 1]
    new_position = deviation.values[k - 1]
    old_out, new_out = outcome.values[k - 1], deviated_outcome.values[k - 1]
    bracketed = between(old_position, old_out, new_out) and between(
        new_position, new_out, old_out
    )
    case = "bracketed" if bracketed else "violated"
    return UncompromisingVerdict(case, boundary, outcome, deviated_outcome)


def _default_shape(
    rule: RuleLike, n: Optional[int], m: Optional[int], domain: Optional[Domain]
) -> tuple[int, int, Domain]:
    if isinstance(rule, ExtendedMedianRule):
        return n or rule.phantoms.n, m or rule.phantoms.m, domain or rule.phantoms.domain
    if isinstance(rule, PRule):
        positions = rule.positions.positions
        return n or max(3, positions[-1]), m or len(positions), domain or Domain.unit()
    if isinstance(rule, DictatorRule):
        return n or max(3, rule.agent), m or 2, domain or Domain.unit()
    if isinstance(rule, MultisetRule):
        return n or 3, m or 2, domain or Domain.unit()
    return n or 3, m or 2, domain or Domain.unit()


def _targeted_values(
    rule: RuleLike, profile: Profile
) -> tuple[Fraction, ...]:
    """Misreport values that historically break manipulable rules."""
    domain = profile.domain
    pool = {domain.lower, domain.upper}
    for row in profile.rows:
        pool.update(row.values)
    if isinstance(rule, ExtendedMedianRule):
        for column in rule.phantoms.columns:
            pool.update(column)
    return tuple(sorted(pool))


def sp_fuzz(
    rule: RuleLike,
    trials: int,
    seed: int,
    deviation_grid: int = 16,
    *,
    domain: Optional[Domain] = None,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> Optional[ManipulationWitness]:
    """Search for a profitable unilateral misreport under sincere peaks.

    Each trial draws a profile, an agent with a random positively weighted
    preference peaked at their sincere report, and one deviation: either a
    single boundary moved to a targeted value (another agent's endpoint, a
    phantom, a corner, or a lattice point) or an entirely fresh row.  The
    first profitable deviation is verified by replay and returned.
    """
    evaluator = as_evaluator(rule)
    n, m, domain = _default_shape(rule, n, m, domain)
    for t in range(trials):
        rng = spawn(seed, "sp-fuzz", t)
        profile = random_profile(rng, domain, n, m, denominator=deviation_grid)
        agent = rng.randint(1, n)
        preference = SinglePeakedPreference(
            profile.row(agent), random_weights(rng, m)
        )
        peak = preference.peak.values
        if rng.random() < 1 / 2:
            pool = _targeted_values(rule, profile)
            values = list(peak)
            values[rng.randint(1, m) - 1] = pool[rng.randint(0, len(pool) - 1)]
            misreport_values = tuple(sorted(values))
        else:
            misreport_values = sorted_between(
                rng, domain.lower, domain.upper, m, deviation_grid
            )
        if misreport_values == peak:
            continue
        misreport = EndpointMultiset(domain, misreport_values)
        truthful_outcome = evaluator(profile)
        manipulated_outcome = evaluator(profile.with_row(agent, misreport))
        gain = utility(preference, manipulated_outcome) - utility(
            preference, truthful_outcome
        )
        if gain > 0:
            witness = ManipulationWitness(
                agent,
                preference,
                profile,
                misreport,
                truthful_outcome,
                manipulated_outcome,
                gain,
            )
            if witness.replay(rule) != gain:
                raise AssertionError("manipulation witness failed to replay")
            return witness
    return None


def uncompromising_fuzz(
    rule: RuleLike,
    trials: int,
    seed: int,
    *,
    domain: Optional[Domain] = None,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> Optional[UncompromisingVerdict]:
    """Sample unilateral deviations and return the first bracketing failure."""
    n, m, domain = _default_shape(rule, n, m, domain)
    for t in range(trials):
        rng = spawn(seed, "uncompromising", t)
        profile = random_profile(rng, domain, n, m, denominator=16)
        agent = rng.randint(1, n)
        deviation = EndpointMultiset(
            domain,
            sorted_between(rng, domain.lower, domain.upper, m, 16, include_ends=True),
        )
        boundary = rng.randint(1, m)
        verdict = check_uncompromising(rule, profile, agent, deviation, boundary)
        if verdict.case == "violated":
            return verdict
    return None


def check_separability_on_deviations(
    rule: RuleLike,
    trials: int,
    seed: int,
    *,
    domain: Optional[Domain] = None,
    n: Optional[int] = None,
    m: Optional[int] = None,
) -> AxiomReport:
    """Resampling the other columns must not move f^k for a columnwise rule.

    Each trial fixes one column of a random profile and redraws everything
    else row by row within the brackets that keep the rows sorted.  The
    pooled-multiset rule fails this quickly; columnwise rules never do.
    """
    evaluator = as_evaluator(rule)
    n, m, domain = _default_shape(rule, n, m, domain)
    for t in range(trials):
        rng = spawn(seed, "separability", t)
        profile = random_profile(rng, domain, n, m, denominator=16)
        k = rng.randint(1, m)
        rows = []
        for row in profile.rows:
            pivot = row.values[k - 1]
            left = sorted_between(rng, domain.lower, pivot, k - 1, 16)
            right = sorted_between(rng, pivot, domain.upper, m - k, 16)
            rows.append(left + (pivot,) + right)
        resampled = Profile.from_rows(domain, rows)
        before = evaluator(profile).values[k - 1]
        after = evaluator(resampled).values[k - 1]
        if before != after:
            return AxiomReport(
                "separability",
                VIOLATED,
                seed=seed,
                trials=t + 1,
                witness={
                    "profile": profile.values(),
                    "resampled": resampled.values(),
                    "column": k,
                    "before": before,
                    "after": after,
                },
            )
    return AxiomReport("separability", HOLDS, seed=seed, trials=trials)
