"""Exact arithmetic substrate: factored rationals, square classes, residue symbols.

Every quantity in this package is an ``int`` or a ``fractions.Fraction``;
nothing here ever touches floating point.  ``Fraction`` already enforces the
canonical form we need (positive denominator, reduced, 0 == 0/1), so it *is*
our rational type.

Factoring is deterministic and complete whenever numerator and denominator fit
in 64 bits: trial division by a fixed table of small primes, then Brent's cycle
method with a fixed parameter sweep, with strong-pseudoprime certification of
the cofactors (the 12-base test is deterministic below 2**64; larger cofactors
use an extended fixed base list, which is the documented envelope of the
guarantee).  Work is capped by a budget so an oversized input fails loudly with
:class:`BudgetExceededError` instead of spinning or silently dropping factors.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_BUDGET_ENV = "SDNB_FACTOR_BUDGET"
DEFAULT_FACTOR_BUDGET = 4_000_000


class BudgetExceededError(ArithmeticError):
    """A computation exceeded its configured work budget.

    Raised by :func:`factor` when a cofactor cannot be split within the
    budget, and by other brute-force routines (Hilbert oracle, irreducibility
    screening) when the requested search space is oversized.  Never raised
    *after* producing a partial answer: results are exact or absent.
    """


def _work_budget() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_FACTOR_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{_BUDGET_ENV} must be positive")
    return value


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, limit, i))
    return tuple(i for i in range(limit) if flags[i])


_SMALL_PRIMES = _sieve(10_000)

# Deterministic for n < 2**64 (Sorenson-Webster); the tail bases extend the
# fixed test to larger inputs without a completeness claim.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_prime(n: int) -> bool:
    """Strong-pseudoprime primality test, deterministic below 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    bases = _MR_BASES if n < 1 << 64 else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_split(n: int, budget: list[int]) -> int:
    """Return a nontrivial factor of odd composite ``n`` (deterministic sweep)."""
    batch = 128
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(batch, r - k)
                if budget[0] < steps:
                    raise BudgetExceededError(
                        f"factoring budget exhausted while splitting {n}"
                    )
                budget[0] -= steps
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += steps
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise BudgetExceededError(f"cycle search failed to split {n}")


def _factor_int(n: int, budget: list[int]) -> dict[int, int]:
    """Factor ``n >= 1`` into a prime -> exponent map."""
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_split(m, budget)
        stack.append(d)
        stack.append(m // d)
    return out


@dataclass(frozen=True)
class FactoredRational:
    """A nonzero rational as sign times a product of prime powers.

    ``factors`` is a sorted tuple of (prime, exponent) pairs with nonzero
    exponents; negative exponents carry the denominator.  The representation
    is canonical: two equal rationals factor to equal objects.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if any(e == 0 for _, e in self.factors):
            raise ValueError("zero exponent in factorization")
        if list(self.factors) != sorted(self.factors):
            raise ValueError("factors must be sorted by prime")

    def value(self) -> Fraction:
        """Reconstruct the rational exactly."""
        num, den = self.sign, 1
        for p, e in self.factors:
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(num, den)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@lru_cache(maxsize=1 << 16)
def _factor_fraction(num: int, den: int) -> FactoredRational:
    sign = 1 if num > 0 else -1
    budget = [_work_budget()]
    fac = _factor_int(abs(num), budget)
    for p, e in _factor_int(den, budget).items():
        fac[p] = fac.get(p, 0) - e
    items = tuple(sorted((p, e) for p, e in fac.items() if e != 0))
    return FactoredRational(sign, items)


def factor(q: Fraction | int) -> FactoredRational:
    """Signed prime factorization of a nonzero rational.

    Deterministic; complete for 64-bit numerators/denominators, raises
    :class:`BudgetExceededError` beyond the work budget (never silently
    wrong).  Results are memoized, so repeated square-class reductions of
    the same value cost one factorization.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("cannot factor zero")
    return _factor_fraction(q.numerator, q.denominator)


def squarefree_part(q: Fraction | int) -> int:
    """The unique squarefree integer s with q = s * (nonzero square).

    Works on exponent parity, so rationals reduce to integers:
    45/8 = 5 * 3^2 * 2^-3 gives 5 * 2 = 10.
    """
    f = factor(q)
    s = f.sign
    for p, e in f.factors:
        if e % 2:
            s *= p
    return s


def is_square(q: Fraction | int) -> bool:
    """True iff q is the square of a rational (0 counts as a square)."""
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol (a|p) for an odd prime p: +1, -1 or 0."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("euler_phi needs m >= 1")
    out = 1
    for p, e in factor(m).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def mult_order(a: int, m: int) -> int:
    """Multiplicative order of a in (Z/m)^x.  Requires gcd(a, m) = 1."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m <= 2:
        return 1
    t = euler_phi(m)
    for p, _ in factor(t).factors:
        while t % p == 0 and pow(a, t // p, m) == 1:
            t //= p
    return t


def mult_order_mod_pm1(a: int, m: int) -> int:
    """Order of the image of a in (Z/m)^x / {+-1}.

    Equals mult_order(a, m) or half of it; the half occurs exactly when some
    power of a is -1 mod m.
    """
    d = mult_order(a, m)
    if m <= 2:
        return 1
    if d % 2 == 0 and pow(a, d // 2, m) == m - 1:
        return d // 2
    return d


def parse_rational(text: str) -> Fraction:
    """Parse "n" or "n/d" decimal strings."""
    return Fraction(text.strip())
