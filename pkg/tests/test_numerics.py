import random
from fractions import Fraction

import pytest

from errors import UndefinedForm
from numerics import INF, ONE, ZERO, XRat, compare, parse_weight, render_weight, weight_reciprocal


def test_fractions_are_reduced_with_positive_denominator():
    assert XRat(2, 4) == XRat(1, 2)
    assert XRat(1, -2).render() == "-1/2"
    assert XRat(6, 3).render() == "2"
    assert XRat(6, 3).is_integer


def test_parse_accepts_fractions_integers_and_infinity():
    assert XRat.parse("3/6") == XRat(1, 2)
    assert XRat.parse(" 7 ") == XRat(7)
    assert XRat.parse("INF") is INF
    assert XRat.parse("inf") is INF
    assert XRat.parse("∞") is INF
    assert XRat("5/10") == XRat(1, 2)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        XRat.parse("abc")
    with pytest.raises(UndefinedForm):
        XRat.parse("1/0")


def test_constructor_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        XRat(1.5)
    with pytest.raises(TypeError):
        XRat(True)


def test_values_are_immutable():
    x = XRat(3)
    with pytest.raises(AttributeError):
        x.anything = 1


def test_infinity_absorbs_finite_values():
    assert INF + 1 is INF
    assert 1 + INF is INF
    assert INF * 2 is INF
    assert INF - 5 is INF
    assert ONE / INF == ZERO
    assert INF ** 2 is INF
    assert INF.reciprocal() == ZERO


@pytest.mark.parametrize(
    "operation",
    [
        lambda: ZERO * INF,
        lambda: INF * ZERO,
        lambda: INF - INF,
        lambda: XRat(5) - INF,
        lambda: INF / INF,
        lambda: XRat(1) / 0,
        lambda: XRat(-1) * INF,
        lambda: -INF,
        lambda: ZERO ** -1,
    ],
)
def test_undefined_forms_raise(operation):
    with pytest.raises(UndefinedForm):
        operation()


def test_infinity_is_larger_than_every_finite_value():
    huge = XRat(10 ** 40)
    assert huge < INF
    assert not INF < huge
    assert sorted([INF, XRat(3), XRat(-1, 2)]) == [XRat(-1, 2), XRat(3), INF]
    assert compare(INF, 5) == 1
    assert compare(XRat(1, 2), Fraction(1, 2)) == 0
    assert compare(-3, XRat(1, 3)) == -1


def test_hash_is_consistent_with_equality():
    assert len({XRat(1, 2), XRat(2, 4), XRat(3)}) == 2
    assert hash(XRat(3)) == hash(3)


def test_json_form():
    assert XRat(-3, 4).to_json() == {"num": -3, "den": 4}
    assert INF.to_json() == {"num": "INF", "den": None}
    assert XRat.from_json({"num": "INF", "den": None}) is INF
    assert XRat.from_json({"num": 6, "den": 8}) == XRat(3, 4)


def test_bool_and_sign():
    assert not ZERO
    assert INF
    assert XRat(-2).sign() == -1
    assert INF.sign() == 1


def test_weight_helpers():
    assert weight_reciprocal(4) == XRat(1, 4)
    assert weight_reciprocal(INF) == ZERO
    assert parse_weight("INF") is INF
    assert parse_weight("12") == 12
    assert render_weight(INF) == "INF"
    assert render_weight(3) == "3"
    with pytest.raises(ValueError):
        weight_reciprocal(0)
    with pytest.raises(ValueError):
        parse_weight("0")
    with pytest.raises(ValueError):
        parse_weight("3/2")


def test_field_laws_on_random_values():
    rng = random.Random(20240917)
    for _ in range(300):
        x, y, z = (XRat(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        fraction = x.as_fraction()
        assert fraction.denominator > 0
        assert XRat.parse(x.render()) == x
