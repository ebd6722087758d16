"""Dense univariate polynomials in pi over an exact field."""

from __future__ import annotations

from .field import Field


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of pi^k.

    Trailing zeros are always stripped, so the zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        self.coeffs = _strip([field(c) for c in coeffs])

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs must already be field elements with trailing zeros stripped
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, field, c):
        c = field(c)
        return cls._raw(field, (c,) if c else ())

    @classmethod
    def monomial(cls, field, c, k: int):
        c = field(c)
        if not c:
            return cls._raw(field, ())
        return cls._raw(field, (field.zero,) * k + (c,))

    # basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def lowest_degree(self):
        """Index of the lowest nonzero coefficient; None for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def leading(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.field.label}, {list(self.coeffs)})"

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial._raw(F, _strip(out))

    def __neg__(self):
        F = self.field
        return Polynomial._raw(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(F, ())
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial._raw(F, _strip(out))

    def scale(self, c):
        F = self.field
        if not c:
            return Polynomial._raw(F, ())
        return Polynomial._raw(F, tuple(F.mul(c, x) for x in self.coeffs))

    def shift(self, k: int):
        """Multiply (k >= 0) or exactly divide (k < 0) by pi^|k|."""
        if not self.coeffs:
            return self
        if k >= 0:
            return Polynomial._raw(self.field, (self.field.zero,) * k + self.coeffs)
        low = self.lowest_degree()
        if low < -k:
            raise ArithmeticError("shift would produce a negative power of pi")
        return Polynomial._raw(self.field, self.coeffs[-k:])

    def divmod(self, other):
        """Euclidean division by a nonzero polynomial."""
        F = self.field
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(b) - 1
        inv_lead = F.inv(b[-1])
        if len(rem) - 1 < db:
            return Polynomial._raw(F, ()), self
        quot = [F.zero] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = F.mul(c, inv_lead)
            quot[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] = F.sub(rem[k - db + j], F.mul(q, b[j]))
        return Polynomial._raw(F, _strip(quot)), Polynomial._raw(F, _strip(rem))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
