"""Exact arithmetic in R = F[[pi]] (as the localization F[pi]_(pi))."""

from .field import QQ, Field
from .local import (INF, LocalElement, arithmetic, divide_exact, invert,
                    residue, valuation)
from .polynomial import Polynomial, poly_gcd
from .text import parse, render

__all__ = [
    "Field", "QQ", "Polynomial", "poly_gcd", "LocalElement", "INF",
    "arithmetic", "invert", "divide_exact", "valuation", "residue",
    "parse", "render",
]
