"""Measure values: exact rationals plus a distinguished infinity.

Quotient measures (width, boost, support ratio) become infinite when the
set in their denominator is empty.  Finite values are ``Fraction``; the
infinite value is the singleton :data:`INF`, which sorts above every
number and refuses arithmetic.
"""

from fractions import Fraction
from numbers import Real


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("boostminer.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if other is self or isinstance(other, Real):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, Real):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, Real):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, Real):
            return True
        return NotImplemented

    def _no_arithmetic(self, *args):
        raise TypeError("arithmetic on an infinite measure value is undefined")

    __add__ = __radd__ = __sub__ = __rsub__ = _no_arithmetic
    __mul__ = __rmul__ = __truediv__ = __rtruediv__ = _no_arithmetic
    __neg__ = __float__ = _no_arithmetic

    def __reduce__(self):
        return (_get_inf, ())


INF = _Infinity()


def _get_inf():
    return INF


def is_infinite(value):
    return value is INF


def quotient(numerator, denominator):
    """Exact ``numerator / denominator``, or ``INF`` for a zero denominator."""
    if denominator == 0:
        return INF
    return Fraction(numerator) / Fraction(denominator)


def as_fraction(value):
    """Convert a user-supplied threshold to an exact ``Fraction``.

    Floats go through their shortest decimal representation so that
    ``1.05`` becomes ``21/20`` rather than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def format_measure(value, places=4):
    if value is INF:
        return "inf"
    return f"{float(value):.{places}f}"
