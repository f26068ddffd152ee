"""Seeded rational parameter points off a factor set."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..polycore import ParameterPoint, specialize


class SamplingExhaustedError(RuntimeError):
    pass


def _factor_vanishes(f, a: ParameterPoint) -> bool:
    return specialize(f, a).is_zero


def random_rational(rng: np.random.Generator, height: int) -> Fraction:
    num = int(rng.integers(-height, height + 1))
    den = int(rng.integers(1, height + 1))
    return Fraction(num, den)


def sample_stable_points(F, count: int, seed: int = 0, d: int | None = None, height: int = 50) -> list[ParameterPoint]:
    """``count`` distinct rational points with every factor of F nonzero.

    Point i draws from its own stream ``default_rng([seed, i])`` so adding
    points never perturbs earlier ones.
    """
    factors = [f for f in F]
    if any(f.is_zero for f in factors):
        raise ValueError("factor set contains the zero polynomial")
    if d is None:
        if not factors:
            raise ValueError("need d when the factor set is empty")
        d = factors[0].ctx.d
    if d == 0:
        return [ParameterPoint(())] * count
    points: list[ParameterPoint] = []
    seen = set()
    budget = 1000 * max(count, 1)
    trials = 0
    i = 0
    while len(points) < count:
        rng = np.random.default_rng([seed, i])
        i += 1
        for _ in range(1000):
            trials += 1
            if trials > budget:
                raise SamplingExhaustedError(f"no stable point found after {budget} trials")
            a = ParameterPoint(tuple(random_rational(rng, height) for _ in range(d)))
            if a.coords in seen:
                continue
            if any(_factor_vanishes(f, a) for f in factors):
                continue
            seen.add(a.coords)
            points.append(a)
            break
    return points
