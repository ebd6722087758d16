"""Elements of R = F[[pi]] modelled exactly by the localization F[pi]_(pi).

An element is a fraction num/den of polynomials whose denominator does not
vanish at pi = 0, i.e. is a unit of the power series ring. Every finitely
generated R-module invariant (rank, invariant factors) computed with these
elements agrees with the one over F[[pi]].
"""

from __future__ import annotations

import math
from typing import Union

from ..errors import (FieldMismatchError, NotAUnitError, NotInRingError,
                      ZeroInverseError)
from .field import Field, QQ
from .polynomial import Polynomial, poly_gcd

Valuation = Union[int, float]  # float only for math.inf (the zero element)

INF = math.inf


class LocalElement:
    """Canonical fraction num/den with den(0) == 1 and gcd(num, den) == 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.constant(num.field, 1)
        if num.field != den.field:
            raise FieldMismatchError("numerator and denominator fields differ")
        if den.is_zero() or not den.constant_term():
            raise NotInRingError("denominator must be a unit (nonzero constant term)")
        n, d = _canonical(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, field: Field = QQ):
        return cls._raw(Polynomial._raw(field, ()), Polynomial.constant(field, 1))

    @classmethod
    def one(cls, field: Field = QQ):
        return cls.constant(field, 1)

    @classmethod
    def constant(cls, field: Field, c):
        return cls._raw(Polynomial.constant(field, c), Polynomial.constant(field, 1))

    @classmethod
    def monomial(cls, field: Field, c, k: int):
        """c * pi^k."""
        return cls._raw(Polynomial.monomial(field, c, k), Polynomial.constant(field, 1))

    @classmethod
    def pi_power(cls, field: Field, k: int):
        return cls.monomial(field, 1, k)

    @classmethod
    def from_coeffs(cls, field: Field, num_coeffs, den_coeffs=(1,)):
        return cls(Polynomial(field, num_coeffs), Polynomial(field, den_coeffs))

    # queries ------------------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.num.field

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def valuation(self) -> Valuation:
        low = self.num.lowest_degree()
        return INF if low is None else low

    def residue(self):
        return self.num.constant_term()

    def is_unit(self) -> bool:
        return bool(self.num.coeffs) and bool(self.num.coeffs[0])

    def is_monomial(self) -> bool:
        if not self.den.is_one():
            return False
        return sum(1 for c in self.num.coeffs if c) <= 1

    def unit_part(self):
        """u with self == pi^valuation * u (self must be nonzero)."""
        k = self.valuation()
        return LocalElement._raw(self.num.shift(-k), self.den)

    def __eq__(self, other):
        if isinstance(other, LocalElement):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self == LocalElement.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .text import render
        return f"LocalElement({render(self)!r})"

    def __str__(self):
        from .text import render
        return render(self)

    # arithmetic ---------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LocalElement):
            if isinstance(other, int):
                return LocalElement.constant(self.field, other)
            return NotImplemented
        if other.num.field != self.num.field:
            raise FieldMismatchError(
                f"{self.field.label} element combined with {other.field.label} element")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if a.den.is_one() and b.den.is_one():
            return LocalElement._raw(a.num + b.num, a.den)
        if a.den == b.den:
            return LocalElement._raw(*_canonical(a.num + b.num, a.den))
        return LocalElement._raw(*_canonical(a.num * b.den + b.num * a.den, a.den * b.den))

    __radd__ = __add__

    def __neg__(self):
        return LocalElement._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if a.den.is_one() and b.den.is_one():
            return LocalElement._raw(a.num * b.num, a.den)
        return LocalElement._raw(*_canonical(a.num * b.num, a.den * b.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return divide_exact(self, other)

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        out = LocalElement.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        """Multiply by a residue-field scalar."""
        if not c:
            return LocalElement.zero(self.field)
        return LocalElement._raw(self.num.scale(c), self.den)


def _canonical(num: Polynomial, den: Polynomial):
    F = num.field
    if num.is_zero():
        return num, Polynomial.constant(F, 1)
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    c = den.constant_term()
    if c != 1:
        ci = F.inv(c)
        num = num.scale(ci)
        den = den.scale(ci)
    return num, den


# functional surface ---------------------------------------------------------------


def arithmetic(a: LocalElement, b: LocalElement, op: str) -> LocalElement:
    """Exact ``add``/``sub``/``mul`` of canonical elements over one field."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.label} vs {b.field.label}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def valuation(a: LocalElement) -> Valuation:
    return a.valuation()


def residue(a: LocalElement):
    """Constant term of the power series expansion: num(0)/den(0)."""
    return a.residue()


def invert(a: LocalElement) -> LocalElement:
    if a.is_zero():
        raise ZeroInverseError("zero has no inverse")
    if a.valuation() != 0:
        raise NotAUnitError(f"{a} has valuation {a.valuation()} and is not a unit of R")
    return LocalElement._raw(*_canonical(a.den, a.num))


def divide_exact(a: LocalElement, b: LocalElement) -> LocalElement:
    """The unique q in R with q * b == a; needs val(a) >= val(b)."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.label} vs {b.field.label}")
    if b.is_zero():
        raise ZeroInverseError("division by zero")
    if a.is_zero():
        return LocalElement.zero(a.field)
    k = b.valuation()
    if a.valuation() < k:
        raise NotInRingError(
            f"quotient has valuation {a.valuation() - k} < 0 and is not in R")
    bn = b.num.shift(-k)
    an = a.num.shift(-k)
    if a.den.is_one() and b.den.is_one() and bn.degree == 0:
        # monomial-unit divisor: no gcd needed
        return LocalElement._raw(an.scale(a.field.inv(bn.coeffs[0])), a.den)
    return LocalElement._raw(*_canonical(an * b.den, a.den * bn))
