"""Places of Q and the Hilbert symbol (a,b)_v at every place.

``hilbert`` evaluates the symbol from square-class data with the classical
closed formulas: sign inspection at the real place, the unit/valuation split
at odd p, and the mod-8 characters eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8
at p = 2.  Callers pass arbitrary nonzero rationals; reduction to squarefree
integer representatives happens here.

``hilbert_oracle`` is the independent cross-check: a brute-force search for a
primitive solution of z^2 = a x^2 + b y^2 modulo p^N with N = v_p(4ab) + 3.
At that precision a primitive solution lifts to Z_p by Hensel's lemma and the
absence of one certifies local anisotropy, so the search is decisive rather
than heuristic.  A solution is primitive iff one coordinate is a unit, and
scaling by that unit's inverse normalizes the coordinate to 1, so scanning
the three slices x = 1, y = 1, z = 1 is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from .exact import BudgetExceededError, is_prime, factor, squarefree_part


@dataclass(frozen=True)
class Place:
    """A place of Q: the real place (prime None) or a verified finite prime."""

    prime: int | None = None

    def __post_init__(self) -> None:
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def sort_key(self) -> tuple[int, int]:
        return (0, 0) if self.prime is None else (1, self.prime)

    def to_json(self) -> str | int:
        return "real" if self.prime is None else self.prime

    def __str__(self) -> str:
        return "real" if self.prime is None else str(self.prime)


REAL = Place()


def finite(p: int) -> Place:
    return Place(p)


def place_from_json(value: str | int) -> Place:
    if value == "real":
        return REAL
    return Place(int(value))


def _eps2(u: int) -> int:
    return ((u - 1) // 2) & 1


def _omega2(u: int) -> int:
    return ((u * u - 1) // 8) & 1


def _unit_and_valuation(s: int, p: int) -> tuple[int, int]:
    v = 0
    while s % p == 0:
        s //= p
        v += 1
    return s, v


def hilbert(a: Fraction | int, b: Fraction | int, v: Place) -> int:
    """The Hilbert symbol (a,b)_v, +1 or -1.

    Symmetric and bimultiplicative; depends only on the square classes of a
    and b.
    """
    a0 = squarefree_part(a)
    b0 = squarefree_part(b)
    if v.is_real:
        return -1 if (a0 < 0 and b0 < 0) else 1
    p = v.prime
    assert p is not None
    if p == 2:
        u, alpha = _unit_and_valuation(abs(a0), 2)
        w, beta = _unit_and_valuation(abs(b0), 2)
        u = u if a0 > 0 else -u
        w = w if b0 > 0 else -w
        e = _eps2(u) * _eps2(w) + alpha * _omega2(w) + beta * _omega2(u)
        return -1 if e & 1 else 1
    u, alpha = _unit_and_valuation(abs(a0), p)
    w, beta = _unit_and_valuation(abs(b0), p)
    u = u if a0 > 0 else -u
    w = w if b0 > 0 else -w
    s = 1
    if beta:
        s *= legendre_sign(u, p)
    if alpha:
        s *= legendre_sign(w, p)
    if alpha and beta and (p - 1) // 2 % 2 == 1:
        s = -s
    return s


def legendre_sign(u: int, p: int) -> int:
    # u is a unit mod p here, so the symbol is +-1
    t = pow(u % p, (p - 1) // 2, p)
    return 1 if t == 1 else -1


_ORACLE_MODULUS_CAP = 4_000_000


@lru_cache(maxsize=None)
def _oracle_reduced(a: int, b: int, p: int) -> int:
    vp = 0
    t = 4 * abs(a * b)
    while t % p == 0:
        t //= p
        vp += 1
    n = vp + 3
    m = p**n
    if m > _ORACLE_MODULUS_CAP:
        raise BudgetExceededError(f"oracle modulus {p}^{n} exceeds the search cap")
    am, bm = a % m, b % m
    y = np.arange(m, dtype=np.int64)
    y2 = (y * y) % m
    squares = np.zeros(m, dtype=bool)
    squares[y2] = True
    # x = 1: z^2 = a + b y^2
    if squares[(am + bm * y2) % m].any():
        return 1
    # y = 1: z^2 = a x^2 + b
    if squares[(am * y2 + bm) % m].any():
        return 1
    # z = 1: a x^2 + b y^2 = 1
    b_y2 = np.zeros(m, dtype=bool)
    b_y2[(bm * y2) % m] = True
    if b_y2[(1 - am * y2) % m].any():
        return 1
    return -1


def hilbert_oracle(a: int, b: int, p: int) -> int:
    """Brute-force Hilbert symbol at a finite prime; see the module docstring.

    Arguments reduce to squarefree representatives first, so the p-exponents
    entering the precision bound are at most 1.
    """
    if a == 0 or b == 0:
        raise ValueError("oracle arguments must be nonzero")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _oracle_reduced(squarefree_part(a), squarefree_part(b), p)


def support_places(pairs: Iterable[tuple[Fraction | int, Fraction | int]]) -> set[Place]:
    """Real, 2, and every prime of a numerator or denominator in the list.

    A superset of the places where any symbol (a,b)_v can be nontrivial.
    """
    primes: set[int] = {2}
    for a, b in pairs:
        for q in (a, b):
            if Fraction(q) == 0:
                raise ValueError("support of a zero entry is undefined")
            primes.update(p for p, _ in factor(q).factors)
    return {REAL} | {Place(p) for p in primes}
