"""Exact arithmetic on the Farey circle of slopes.

A slope is a point of Q u {infinity} stored as a coprime integer pair
(num, den) with den >= 0; infinity is canonically 1/0.  The clockwise
cyclic order used throughout the package visits 0, the positive rationals
increasing, infinity, and then the negative rationals increasing back
toward 0.  Every comparison is an exact integer cross-multiplication;
no floating point is ever used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class FareyError(ValueError):
    """A slope operation was applied outside its domain."""


@dataclass(frozen=True)
class Slope:
    """A point of the Farey circle, reduced to canonical form on creation.

    Canonical form: gcd(|num|, |den|) = 1 and den >= 0, with infinity
    stored as (1, 0) regardless of the sign it was given.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            if num == 0:
                raise FareyError("0/0 is not a slope")
            num = 1
        else:
            g = math.gcd(num, den)
            num //= g
            den //= g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", hash((num, den)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise FareyError("infinity has no finite value")
        return Fraction(self.num, self.den)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse "num/den" (with "1/0" for infinity) or a bare integer."""
        text = text.strip()
        if text in ("inf", "oo"):
            return INFINITY
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text), 1)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self.num}, {self.den})"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


@dataclass(frozen=True)
class SignedVector:
    """An unreduced integer pair recording a curve class on the torus.

    Unlike Slope this is never reduced: Euler-class sums weight curve
    classes with multiplicity, and reduction would corrupt the totals.
    (0, 0) is allowed as the zero class.
    """

    a: int
    b: int

    def __add__(self, other: "SignedVector") -> "SignedVector":
        return SignedVector(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "SignedVector":
        return SignedVector(-self.a, -self.b)

    def scaled(self, k: int) -> "SignedVector":
        return SignedVector(k * self.a, k * self.b)

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


def dot(x: Slope, y: Slope) -> int:
    """Determinant pairing ad - bc of x = a/b and y = c/d (canonical reps).

    Antisymmetric; its absolute value is the minimal geometric
    intersection number of the corresponding curves on the torus.
    """
    return x.num * y.den - x.den * y.num


def cross(u: SignedVector, v) -> int:
    """Determinant pairing of an unreduced curve class with a Slope or
    another SignedVector."""
    if isinstance(v, Slope):
        return u.a * v.den - u.b * v.num
    return u.a * v.b - u.b * v.a


def has_edge(x: Slope, y: Slope) -> bool:
    """True iff x and y span an edge of the Farey graph (|dot| = 1)."""
    return abs(dot(x, y)) == 1


def farey_sum(x: Slope, y: Slope) -> Slope:
    """Mediant of two Farey-adjacent slopes.

    The representative of infinity is chosen so the mediant lands on the
    same side of the circle as the finite operand: (1, 0) against
    non-negative slopes and (-1, 0) against negative ones.  In particular
    farey_sum(ZERO, INFINITY) is 1 and farey_sum(Slope(-p), INFINITY)
    is -(p + 1).
    """
    if x == y:
        raise FareyError("mediant of equal slopes is undefined")
    if not has_edge(x, y):
        raise FareyError(f"{x} and {y} are not adjacent in the Farey graph")
    if x.is_infinite or y.is_infinite:
        f = y if x.is_infinite else x
        inf_num = 1 if f.num >= 0 else -1
        return Slope(f.num + inf_num, f.den)
    return Slope(x.num + y.num, x.den + y.den)


def iterated_sum(x: Slope, k: int, y: Slope) -> Slope:
    """k-fold mediant x (+) k*y; k = 0 returns x unchanged."""
    if k < 0:
        raise FareyError("iterated mediant needs k >= 0")
    out = x
    for _ in range(k):
        out = farey_sum(out, y)
    return out


def farey_diff(x: Slope, y: Slope) -> SignedVector:
    """Componentwise difference x (-) y of the canonical representatives.

    The result is deliberately left unreduced.  On paths that cross
    infinity the canonical (1, 0) representative is used; callers needing
    a different lift must supply it themselves.
    """
    return SignedVector(x.num - y.num, x.den - y.den)


def _lt(x: Slope, y: Slope) -> bool:
    # Total order underlying the cyclic one: finite slopes by value,
    # infinity maximal.
    if x.is_infinite:
        return False
    if y.is_infinite:
        return True
    return x.num * y.den < y.num * x.den


def _le(x: Slope, y: Slope) -> bool:
    return x == y or _lt(x, y)


def cw_between(a: Slope, x: Slope, b: Slope) -> bool:
    """True iff x lies on the closed clockwise arc from a to b.

    Clockwise traversal runs 0, positive rationals increasing, infinity,
    negative rationals increasing to 0; equivalently it follows the total
    order of _lt with wraparound from infinity to the most negative
    slopes.
    """
    if a == b:
        raise FareyError("clockwise arc needs distinct endpoints")
    if _lt(a, b):
        return _le(a, x) and _le(x, b)
    return _le(a, x) or _le(x, b)
