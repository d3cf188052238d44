import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boostminer.values import INF, as_fraction, format_measure, is_infinite, quotient


@given(st.fractions())
def test_inf_above_every_rational(x):
    assert INF > x and x < INF
    assert not INF < x
    assert INF >= x and not INF <= x


def test_inf_equality_and_sorting():
    assert INF == INF and INF <= INF and INF >= INF
    assert sorted([INF, Fraction(3), 1.5]) == [1.5, Fraction(3), INF]
    assert max(Fraction(7, 2), INF) is INF
    assert min(Fraction(7, 2), INF) == Fraction(7, 2)


def test_inf_refuses_arithmetic():
    with pytest.raises(TypeError):
        INF + 1
    with pytest.raises(TypeError):
        2 / INF
    with pytest.raises(TypeError):
        float(INF)


def test_inf_survives_pickle():
    assert pickle.loads(pickle.dumps(INF)) is INF


def test_quotient():
    assert quotient(3, 4) == Fraction(3, 4)
    assert quotient(1, 0) is INF
    assert is_infinite(quotient(0, 0))


@pytest.mark.parametrize("raw, expected", [
    (1.05, Fraction(21, 20)),
    (0.8, Fraction(4, 5)),
    ("0.9", Fraction(9, 10)),
    (2, Fraction(2)),
    (Fraction(2, 3), Fraction(2, 3)),
])
def test_as_fraction_uses_decimal_value(raw, expected):
    assert as_fraction(raw) == expected


def test_format_measure():
    assert format_measure(Fraction(16, 15)) == "1.0667"
    assert format_measure(INF) == "inf"
    assert format_measure(Fraction(2, 3), places=2) == "0.67"
