"""Shared generators for randomized tests (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from sdnb import CyclicQuadratic, CyclicQuartic, is_square


def random_nonsquare_rational(rng: random.Random, span: int = 80) -> Fraction:
    while True:
        num = rng.randint(1, span)
        den = rng.randint(1, span)
        z = Fraction(num, den) * rng.choice([1, -1])
        if not is_square(z):
            return z


def random_quadratic_spec(rng: random.Random, n: int = 3) -> CyclicQuadratic:
    return CyclicQuadratic(n, random_nonsquare_rational(rng))


def random_quartic_params(
    rng: random.Random, integral: bool = False
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Valid (a, b, c, eps) with a^2 - b^2 eps = c^2 eps and eps nonsquare.

    eps = a^2 / (b^2 + c^2) is forced by the relation; choosing
    a = (b^2 + c^2) * s makes everything integral, including the defining
    quartic X^4 - 2aX^2 + c^2 eps.
    """
    while True:
        b = Fraction(rng.randint(1, 6) * rng.choice([1, -1]))
        c = Fraction(rng.randint(1, 6) * rng.choice([1, -1]))
        if not integral:
            b /= rng.randint(1, 3)
            c /= rng.randint(1, 3)
        q = b * b + c * c
        if integral:
            s = rng.randint(1, 10) * rng.choice([1, -1])
            a = q * s
        else:
            a = Fraction(rng.randint(1, 20) * rng.choice([1, -1]), rng.randint(1, 4))
        eps = a * a / q
        if is_square(eps):
            continue
        return a, b, c, eps


def random_quartic_spec(rng: random.Random, n: int = 3, integral: bool = False) -> CyclicQuartic:
    a, b, c, eps = random_quartic_params(rng, integral=integral)
    return CyclicQuartic(n, a, b, c, eps)
