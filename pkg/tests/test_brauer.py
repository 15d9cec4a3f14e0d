import random
from fractions import Fraction

import pytest

from sdnb import (
    REAL,
    BrauerClass,
    Place,
    TRIVIAL,
    add,
    cup,
    equal,
    hilbert,
    is_trivial,
    restricts_trivially_to_quadratic,
    splits_in_quadratic,
)


def test_cup_golden():
    assert cup(-1, 3).ramified == {Place(2), Place(3)}
    assert is_trivial(cup(-1, 5))  # 5 = 1 + 4 is a norm from Q(i)
    assert is_trivial(cup(1, 77))
    with pytest.raises(ValueError):
        cup(0, 3)


def test_group_law():
    x = cup(-1, 3)
    assert is_trivial(add(x, x))
    assert equal(add(TRIVIAL, x), x)
    assert equal(add(cup(-1, 3), cup(2, 3)), cup(-2, 3))


def test_even_parity_enforced():
    with pytest.raises(ValueError):
        BrauerClass(frozenset({Place(3)}))


def test_even_parity_of_random_sums():
    rng = random.Random(13)
    acc = TRIVIAL
    for _ in range(1000):
        a = rng.randint(1, 400) * rng.choice([1, -1])
        b = rng.randint(1, 400) * rng.choice([1, -1])
        acc = add(acc, cup(a, b))
        assert len(acc.ramified) % 2 == 0


def test_cup_identities():
    rng = random.Random(17)
    for _ in range(60):
        a = rng.randint(1, 100) * rng.choice([1, -1])
        b = rng.randint(1, 100) * rng.choice([1, -1])
        c = rng.randint(1, 100) * rng.choice([1, -1])
        assert equal(cup(a, b), cup(b, a))
        assert is_trivial(cup(a, -a))
        assert equal(cup(a * b, c), add(cup(a, c), cup(b, c)))


def test_serialization():
    assert cup(-1, -1).to_json() == ["real", 2]
    assert cup(-1, 3).to_json() == [2, 3]
    assert TRIVIAL.to_json() == []


def test_splits_in_quadratic():
    assert splits_in_quadratic(Place(7), 2)  # 2 = 3^2 mod 7
    assert not splits_in_quadratic(Place(3), 2)  # inert
    assert not splits_in_quadratic(Place(2), 2)  # ramified
    assert splits_in_quadratic(Place(2), 17)  # 17 = 1 mod 8
    assert splits_in_quadratic(REAL, 2)
    assert not splits_in_quadratic(REAL, -1)


def test_restriction_golden():
    # the computed class of (-1)(5) is empty, so restriction to Q(sqrt 5)
    # is trivially trivial
    assert restricts_trivially_to_quadratic(cup(-1, 5), 5)
    # {2, 3}: 3 inert in Q(sqrt 2), 2 ramified
    assert restricts_trivially_to_quadratic(cup(3, -1), 2)
    # the real place is in the table and Q(sqrt 2) is real
    assert not restricts_trivially_to_quadratic(cup(-1, -1), 2)
    # 7 splits in Q(sqrt 2), so the invariant at 7 survives
    assert not restricts_trivially_to_quadratic(cup(7, -1), 2)


def test_restriction_imaginary_field_kills_real_place():
    # over Q(sqrt -1) the real place becomes complex and dies, and both 2
    # and the real place are nonsplit; (-1, -1) is the Hamilton class
    assert restricts_trivially_to_quadratic(cup(-1, -1), -1)


def test_restriction_rejects_squares():
    with pytest.raises(ValueError):
        restricts_trivially_to_quadratic(cup(-1, 3), 4)
    with pytest.raises(ValueError):
        restricts_trivially_to_quadratic(cup(-1, 3), 0)


def test_restriction_square_class_invariance():
    rng = random.Random(19)
    for _ in range(50):
        x = cup(rng.randint(1, 60) * rng.choice([1, -1]), rng.randint(1, 60) * rng.choice([1, -1]))
        d = Fraction(rng.randint(2, 40) * rng.choice([1, -1]))
        if d.numerator in (1, -1) or restricts_trivially_to_quadratic is None:
            continue
        try:
            base = restricts_trivially_to_quadratic(x, d)
        except ValueError:
            continue
        r = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        assert restricts_trivially_to_quadratic(x, d * r * r) == base


def test_trivial_class_restricts_trivially_everywhere():
    for d in (2, 3, 5, -1, -2, Fraction(7, 3)):
        assert restricts_trivially_to_quadratic(TRIVIAL, d)


def test_restriction_consistent_with_local_symbols():
    # cross-check: restriction dies iff every ramified place has even local
    # degree, verified here against explicit Hilbert computations over Q
    x = cup(7, -1)  # ramified at {2, 7}
    assert x.ramified == {Place(2), Place(7)}
    assert hilbert(7, -1, Place(7)) == -1
