"""Exact complex-rational scalars.

A value is stored as ``(a + b*i) / d`` with integers ``a, b`` and ``d > 0``,
reduced so that ``gcd(a, b, d) == 1``.  The real and imaginary parts are
exposed as reduced :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar"]


class Scalar:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._set(a, b, d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> Scalar:
        s = object.__new__(cls)
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        s._a = a
        s._b = b
        s._d = d
        s._hash = None
        return s

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                # agree with hash(Fraction) / hash(int) for real values
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __neg__(self) -> Scalar:
        s = object.__new__(Scalar)
        s._a, s._b, s._d, s._hash = -self._a, -self._b, self._d, None
        return s

    def __pos__(self) -> Scalar:
        return self

    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not (other._a or other._b):
            return self
        if not (self._a or self._b):
            return other
        d1, d2 = self._d, other._d
        if d1 == d2:
            return _raw(self._a + other._a, self._b + other._b, d1)
        return _raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if not (a1 or b1) or not (a2 or b2):
            return ZERO
        if b1 == 0 and b2 == 0:
            return _raw(a1 * a2, 0, self._d * other._d)
        return _raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("scalar division by zero")
        a, b, d = self._a, self._b, self._d
        return Scalar._raw(d * a, -d * b, a * a + b * b)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> Scalar:
        return Scalar._raw(self._a, -self._b, self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def __str__(self) -> str:
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{im}i"
        if re == 0:
            return imag
        return f"{re}{imag}" if imag.startswith("-") else f"{re}+{imag}"


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(x, 0, 1)
    if isinstance(x, Rational):
        return Scalar(x)
    return None


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and Scalars; reject floats and complex."""
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")
    return s


_raw = Scalar._raw
ZERO = Scalar._raw(0, 0, 1)
ONE = Scalar._raw(1, 0, 1)
I = Scalar._raw(0, 1, 1)
