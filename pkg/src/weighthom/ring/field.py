"""Residue fields F for R = F[[pi]]: the rationals or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError, ZeroInverseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """An exact field. ``characteristic == 0`` means Q.

    Elements are plain Python values: ``Fraction`` over Q, ``int`` in
    ``range(p)`` over F_p.
    """

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"field characteristic must be 0 or prime, got {c}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``Q``/``q`` and ``Fp:<p>``/``fp:<p>``."""
        t = text.strip()
        if t.lower() == "q":
            return cls(0)
        if t.lower().startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ParseError(f"bad prime in field spec {text!r}") from None
            if not _is_prime(p):
                raise ParseError(f"{p} is not prime")
            return cls(p)
        raise ParseError(f"unknown field {text!r} (expected 'Q' or 'Fp:<p>')")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime"

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def __str__(self):
        return self.label

    # element construction -------------------------------------------------

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    # arithmetic -------------------------------------------------------------

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def inv(self, a):
        if not a:
            raise ZeroInverseError("inverse of zero in the residue field")
        p = self.characteristic
        return 1 / a if p == 0 else pow(a, -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def signed(self, a):
        """Integer-like representative used for rendering (symmetric for F_p)."""
        p = self.characteristic
        if p == 0:
            return a
        return a - p if a > p // 2 else a


QQ = Field(0)
