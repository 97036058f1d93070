"""Gaussian rationals: exact scalars of the form (a + b*i)/d."""
from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd

__all__ = ["Scalar", "ZERO", "ONE", "I"]


class Scalar:
    """An element of Q(i), stored as ``(a + b*i) / d`` in lowest terms.

    ``d > 0`` and ``gcd(a, b, d) == 1``, so two equal scalars always carry
    identical integer triples; equality and hashing are structural.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        g = gcd(a, b, d)
        self._a = a // g
        self._b = b // g
        self._d = d // g

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Scalar":
        # caller guarantees d != 0
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        s = object.__new__(cls)
        if g != 1:
            a //= g
            b //= g
            d //= g
        s._a = a
        s._b = b
        s._d = d
        return s

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    # --- components -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self._a, self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        s = object.__new__(Scalar)
        s._a, s._b, s._d = self._a, -self._b, self._d
        return s

    def norm(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # --- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return Scalar._raw(self._a + other._a, self._b + other._b, d1)
        return Scalar._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        s = object.__new__(Scalar)
        s._a, s._b, s._d = -self._a, -self._b, self._d
        return s

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return Scalar._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self._a, self._b
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return Scalar._raw(self._d * a, -self._d * b, n)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- comparisons -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    # --- text ---------------------------------------------------------------
    def __str__(self):
        re_, im_ = self.re, self.im
        sign = "-" if im_ < 0 else "+"
        return f"{re_}{sign}{abs(im_)}*i"

    def __repr__(self):
        return f"Scalar('{self}')"

    _TERM = _re.compile(r"([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*(\*?\s*i)?")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"a/b+c/d*i"`` and the usual abbreviations (``"3"``, ``"-i"``, ``"1/2*i"``)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        re_part, im_part = Fraction(0), Fraction(0)
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"malformed scalar literal {text!r}")
            sign, num, unit = m.groups()
            if num is None and unit is None:
                raise ValueError(f"malformed scalar literal {text!r}")
            value = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                value = -value
            if unit:
                im_part += value
            else:
                re_part += value
            pos = m.end()
        return cls(re_part, im_part)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
