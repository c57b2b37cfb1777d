"""Seed-driven samplers shared by the randomized checkers.

Every sampler draws from ``random.Random`` instances created via ``spawn``,
which hashes the seed together with a stream label.  String seeding keeps
the draws independent of ``PYTHONHASHSEED``, so a fixed seed reproduces the
exact same profiles, maps, and deviations on every run.  All sampled values
are rationals on a lattice, never floats.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .core import Domain, Profile


def spawn(seed: int, *stream: object) -> random.Random:
    """A generator that depends deterministically on the seed and stream tags."""
    tag = ":".join(str(part) for part in (seed,) + stream)
    return random.Random(tag)


def rational_between(
    rng: random.Random,
    lo: Fraction,
    hi: Fraction,
    denominator: int = 64,
    include_ends: bool = False,
) -> Fraction:
    """A lattice point of [lo, hi], interior unless ``include_ends``."""
    if lo == hi:
        return lo
    if include_ends:
        j = rng.randint(0, denominator)
    else:
        j = rng.randint(1, denominator - 1)
    return lo + (hi - lo) * Fraction(j, denominator)


def sorted_between(
    rng: random.Random,
    lo: Fraction,
    hi: Fraction,
    count: int,
    denominator: int = 64,
    include_ends: bool = True,
) -> tuple[Fraction, ...]:
    """``count`` nondecreasing lattice points of [lo, hi]."""
    draws = [
        rational_between(rng, lo, hi, denominator, include_ends)
        for _ in range(count)
    ]
    return tuple(sorted(draws))


def strict_row(
    rng: random.Random, domain: Domain, m: int, denominator: int = 64
) -> tuple[Fraction, ...]:
    """m strictly increasing interior lattice points (all words active)."""
    if m > denominator - 1:
        raise ValueError(f"lattice with {denominator - 1} interior points cannot hold {m} distinct values")
    picks = sorted(rng.sample(range(1, denominator), m))
    span = domain.upper - domain.lower
    return tuple(domain.lower + span * Fraction(j, denominator) for j in picks)


def random_profile(
    rng: random.Random,
    domain: Domain,
    n: int,
    m: int,
    *,
    strict: bool = False,
    denominator: int = 64,
    include_ends: bool = False,
) -> Profile:
    """n independent sorted rows of m endpoints each.

    A coarse ``denominator`` makes ties across agents likely, which matters
    for checkers hunting discontinuities at tied columns.
    """
    rows = []
    for _ in range(n):
        if strict:
            rows.append(strict_row(rng, domain, m, denominator))
        else:
            rows.append(
                sorted_between(
                    rng, domain.lower, domain.upper, m, denominator, include_ends
                )
            )
    return Profile.from_rows(domain, rows)


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    """A permutation of the 1-based agent indices."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return tuple(order)


def random_weights(
    rng: random.Random, m: int, limit: int = 5
) -> tuple[Fraction, ...]:
    """m strictly positive integer weights for a separable preference."""
    return tuple(Fraction(rng.randint(1, limit)) for _ in range(m))


def lattice_points(domain: Domain, denominator: int) -> tuple[Fraction, ...]:
    """All interior lattice points, used by exhaustive small-grid checks."""
    span = domain.upper - domain.lower
    return tuple(
        domain.lower + span * Fraction(j, denominator) for j in range(1, denominator)
    )


def enumerate_sorted_rows(
    values: Sequence[Fraction], m: int
) -> tuple[tuple[Fraction, ...], ...]:
    """Every nondecreasing row of length m over the given value set."""
    values = tuple(sorted(values))
    rows: list[tuple[Fraction, ...]] = []

    def extend(prefix: tuple[Fraction, ...], start: int) -> None:
        if len(prefix) == m:
            rows.append(prefix)
            return
        for idx in range(start, len(values)):
            extend(prefix + (values[idx],), idx)

    extend((), 0)
    return tuple(rows)
