"""Diagonal rational quadratic forms and trace forms of etale algebras.

Congruence diagonalization, the classical invariants (determinant square
class, signature, Hasse-Witt class w2 = sum of (a_i, a_j) over i < j),
rank-stratified local isotropy, Hasse-Minkowski over Q, representation and
sums-of-squares decisions, and exact trace forms via Newton power sums.

All arithmetic is exact.  The ternary witness search is the only numeric
loop and it verifies every candidate in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from . import brauer
from .brauer import BrauerClass
from .exact import factor, is_square, legendre, squarefree_part
from .symbols import Place, hilbert, support_places


@dataclass(frozen=True)
class DiagonalForm:
    """Nondegenerate diagonal form <a_1, ..., a_n>, entries nonzero rationals."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Fraction | int]) -> None:
        coerced = tuple(Fraction(a) for a in entries)
        if not coerced:
            raise ValueError("a diagonal form needs at least one entry")
        if any(a == 0 for a in coerced):
            raise ValueError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", coerced)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def orthogonal_sum(self, other: "DiagonalForm") -> "DiagonalForm":
        return DiagonalForm(self.entries + other.entries)

    def scaled_integer_entries(self) -> tuple[int, ...]:
        """Entries of a rescaled form with the same zeros, all integers."""
        lcd = 1
        for a in self.entries:
            lcd = lcd * a.denominator // gcd(lcd, a.denominator)
        ints = [int(a * lcd) for a in self.entries]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(v // g for v in ints)

    def __str__(self) -> str:
        return "<" + ", ".join(str(a) for a in self.entries) + ">"


def _exact_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    a = [list(map(Fraction, row)) for row in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                t = a[i][k] * inv
                a[i] = [x - t * y for x, y in zip(a[i], a[k])]
    return det


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric nondegenerate matrix of rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Fraction | int]]) -> None:
        coerced = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(coerced)
        if n == 0 or any(len(row) != n for row in coerced):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if coerced[i][j] != coerced[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if _exact_det(coerced) == 0:
            raise ValueError("Gram matrix is degenerate")
        object.__setattr__(self, "rows", coerced)

    @property
    def n(self) -> int:
        return len(self.rows)

    def det(self) -> Fraction:
        return _exact_det(self.rows)


def diagonalize(g: GramMatrix) -> DiagonalForm:
    """Congruent diagonal form by symmetric elimination.

    Pivots are deterministic: first nonzero diagonal entry at or below the
    current position, else the first (lexicographic) nonzero off-diagonal
    pair (i, j), repaired with the move e_i <- e_i + e_j whose new diagonal
    entry is a_ii + 2 a_ij + a_jj.  Deterministic output keeps golden tests
    stable; the determinant is preserved modulo squares.
    """
    n = g.n
    a = [list(row) for row in g.rows]

    def add_row_col(dst: int, src: int, t: Fraction) -> None:
        for j in range(n):
            a[dst][j] += t * a[src][j]
        for i in range(n):
            a[i][dst] += t * a[i][src]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            found = next(
                (i, j)
                for i in range(k, n)
                for j in range(i + 1, n)
                if a[i][j] != 0
            )
            i, j = found
            add_row_col(i, j, Fraction(1))
            piv = i
        if piv != k:
            swap(k, piv)
        for j in range(k + 1, n):
            if a[k][j]:
                add_row_col(j, k, -a[k][j] / a[k][k])
    return DiagonalForm(a[i][i] for i in range(n))


def det_square_class(f: DiagonalForm) -> int:
    """Squarefree representative of the determinant."""
    prod = Fraction(1)
    for a in f.entries:
        prod *= a
    return squarefree_part(prod)


def signature(f: DiagonalForm) -> tuple[int, int]:
    """Counts of positive and negative entries (a congruence invariant)."""
    pos = sum(1 for a in f.entries if a > 0)
    return pos, f.rank - pos


def hasse_witt(f: DiagonalForm) -> BrauerClass:
    """The class sum of (a_i, a_j) over i < j in Br_2(Q)."""
    out = brauer.TRIVIAL
    for i in range(f.rank):
        for j in range(i + 1, f.rank):
            out = brauer.add(out, brauer.cup(f.entries[i], f.entries[j]))
    return out


def _hasse_invariant_at(f: DiagonalForm, v: Place) -> int:
    s = 1
    for i in range(f.rank):
        for j in range(i + 1, f.rank):
            s *= hilbert(f.entries[i], f.entries[j], v)
    return s


def is_square_in_completion(q: Fraction | int, v: Place) -> bool:
    """Is q a square in the completion of Q at v?"""
    s = squarefree_part(q)
    if v.is_real:
        return s > 0
    p = v.prime
    assert p is not None
    if p == 2:
        return s % 2 != 0 and s % 8 == 1
    return s % p != 0 and legendre(s, p) == 1


def isotropic_over_Qp(f: DiagonalForm, v: Place) -> bool:
    """Local isotropy by the rank-stratified invariant criteria."""
    n = f.rank
    if v.is_real:
        pos, neg = signature(f)
        return pos > 0 and neg > 0
    if n == 1:
        return False
    d = det_square_class(f)
    if n == 2:
        return is_square_in_completion(-d, v)
    eps = _hasse_invariant_at(f, v)
    if n == 3:
        return hilbert(-1, -d, v) == eps
    if n == 4:
        return (not is_square_in_completion(d, v)) or eps == hilbert(-1, -1, v)
    return True


def _support(f: DiagonalForm) -> list[Place]:
    pairs = [(a, a) for a in f.entries]
    return sorted(support_places(pairs), key=Place.sort_key)


def isotropic_over_Q(f: DiagonalForm) -> bool:
    """Hasse-Minkowski: isotropic at every place of the finite support set."""
    return all(isotropic_over_Qp(f, v) for v in _support(f))


def anisotropy_certificate(f: DiagonalForm) -> Place | None:
    """A place where f is locally anisotropic, or None if f is isotropic."""
    for v in _support(f):
        if not isotropic_over_Qp(f, v):
            return v
    return None


def represents(f: DiagonalForm, c: Fraction | int) -> bool:
    """Does f represent c over Q?  Tested as isotropy of f + <-c>."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("representation of 0 is isotropy; pass a nonzero value")
    return isotropic_over_Q(f.orthogonal_sum(DiagonalForm([-c])))


def isotropy_witness_ternary(
    f: DiagonalForm, height_cap: int = 10_000
) -> tuple[int, int, int] | None:
    """Search a nontrivial integer zero of a ternary form, coordinates <= cap.

    The form is scaled to integer entries (same zero set).  The scan runs
    over x, y with the third coordinate solved exactly, in expanding boxes;
    for small entries the classical minima are tiny, so the cap is a safety
    net rather than the expected exit.
    """
    if f.rank != 3:
        raise ValueError("witness search is for ternary forms")
    a, b, c = f.scaled_integer_entries()
    bound = 64
    while True:
        hi = min(bound, height_cap)
        ys = np.arange(0, hi + 1, dtype=np.int64)
        ys2 = ys * ys
        for x in range(0, hi + 1):
            t = -(a * x * x + b * ys2)
            q, r = np.divmod(t, c)
            mask = (r == 0) & (q >= 0)
            if mask.any():
                for y, qq in zip(ys[mask], q[mask]):
                    z = isqrt(int(qq))
                    if z * z == qq and (x or y or z):
                        return (x, int(y), z)
        if hi >= height_cap:
            return None
        bound *= 8


def sum_of_two_squares(z: Fraction | int) -> bool:
    """Is z a sum of two rational squares?

    Holds iff z > 0 and every prime congruent to 3 mod 4 divides z to even
    exponent (norms from Q(i)).
    """
    z = Fraction(z)
    if z == 0:
        raise ValueError("zero input")
    if z < 0:
        return False
    return all(e % 2 == 0 for p, e in factor(z).factors if p % 4 == 3)


def sum_of_four_squares(z: Fraction | int) -> bool:
    """Is z a sum of four rational squares?  Over Q this is just z > 0."""
    z = Fraction(z)
    if z == 0:
        raise ValueError("zero input")
    return z > 0


def sum_of_two_squares_over_sqrt2(z: Fraction | int) -> bool:
    """Is z a sum of two squares in Q(sqrt(2))?

    z is a norm from Q(sqrt(2), i) over Q(sqrt(2)) iff z > 0 and every prime
    congruent to 7 mod 8 divides z to even exponent: the quaternion class
    (z, -1) can only ramify at the real place, at 2, and at primes p = 3 mod
    4; of those only p = 7 mod 8 split in Q(sqrt(2)) and survive restriction
    (2 ramifies, p = 3 mod 8 is inert, and sqrt(2) is real so z < 0 blocks).
    Pure factorization, independent of the symbol machinery.
    """
    z = Fraction(z)
    if z == 0:
        raise ValueError("zero input")
    if z < 0:
        return False
    return all(e % 2 == 0 for p, e in factor(z).factors if p % 8 == 7)


def trace_form(coeffs: Sequence[int]) -> GramMatrix:
    """Gram matrix of the trace form of Q[X]/(f), f monic integer, squarefree.

    ``coeffs`` lists f constant term first, leading coefficient 1.  The
    entries are the power sums s_{i+j} of the roots, computed by Newton's
    identities; a zero determinant means repeated roots and is rejected.
    """
    coeffs = list(coeffs)
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    if any(int(c) != c for c in coeffs):
        raise ValueError("polynomial must have integer coefficients")
    n = len(coeffs) - 1
    s = [Fraction(0)] * (2 * n - 1)
    s[0] = Fraction(n)
    for k in range(1, 2 * n - 1):
        acc = Fraction(0)
        for j in range(1, min(k - 1, n) + 1):
            acc += Fraction(coeffs[n - j]) * s[k - j]
        if k <= n:
            acc += Fraction(k * coeffs[n - k])
        s[k] = -acc
    rows = [[s[i + j] for j in range(n)] for i in range(n)]
    try:
        return GramMatrix(rows)
    except ValueError as exc:
        raise ValueError("polynomial has repeated roots") from exc


def quartic_family_form(
    a: Fraction | int, b: Fraction | int, c: Fraction | int, eps: Fraction | int
) -> DiagonalForm:
    """The diagonal trace form <1, eps, a, a> of the cyclic quartic family.

    Parameters must satisfy a^2 - b^2 eps = c^2 eps with c nonzero and eps
    not a square; the quartic field is Q(sqrt(a + b sqrt(eps))).
    """
    a, b, c, eps = Fraction(a), Fraction(b), Fraction(c), Fraction(eps)
    if c == 0:
        raise ValueError("quartic family needs c nonzero")
    if eps == 0 or is_square(eps):
        raise ValueError("quartic family needs a nonsquare eps")
    if a * a - b * b * eps != c * c * eps:
        raise ValueError("parameters violate a^2 - b^2 eps = c^2 eps")
    return DiagonalForm([1, eps, a, a])
