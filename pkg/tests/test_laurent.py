from annulet.laurent import LaurentPoly, alexander_normalize

import pytest


def test_ring_ops():
    p = LaurentPoly({1: 1, -1: 1})
    q = LaurentPoly({0: -2})
    assert (p + q).items() == [(-1, 1), (0, -2), (1, 1)]
    assert (p * p).items() == [(-2, 1), (0, 2), (2, 1)]
    assert (p - p).is_zero()
    assert p.shift(3).items() == [(2, 1), (4, 1)]
    assert (p ** 3) == p * p * p


def test_zero_coefficients_never_stored():
    p = LaurentPoly({2: 1}) + LaurentPoly({2: -1})
    assert p.is_zero()
    assert p.items() == []


def test_evaluate_and_mirror():
    p = LaurentPoly({-1: 1, 0: -1, 1: 1})  # trefoil alexander
    assert p(1) == 1
    assert p(-1) == -3
    assert p.substitute_power(-1) == p


def test_exact_division():
    delta = LaurentPoly({2: -1, -2: -1})
    square = delta * delta
    assert square.divide_exact(delta) == delta
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 1: 1}).divide_exact(LaurentPoly({0: 2}))


def test_alexander_normalize():
    # t - 1 + 1/t shifted and negated still normalizes to itself
    p = LaurentPoly({-1: 1, 0: -1, 1: 1})
    assert alexander_normalize(p.shift(4).scale(-1)) == p
    assert alexander_normalize(p) == p


def test_format_stable():
    p = LaurentPoly({-2: -1, 0: 3, 2: -1})
    assert p.format("t") == "-t^-2 + 3 - t^2"
    assert p.format("t", 2) == "-t^-1 + 3 - t^1"
