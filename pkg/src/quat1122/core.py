"""Exact arithmetic in the quaternion order of the form x^2 + y^2 + 2z^2 + 2w^2.

The order is the integer span of the basis

    v1 = 1,   v2 = i,   v3 = (1 + i + sqrt(2) j) / 2,   v4 = (1 + i + sqrt(2) k) / 2,

a norm-Euclidean ring with exactly 24 units.  Elements are stored as the
integer coordinate 4-tuple (g1, g2, g3, g4) in this basis.  The alternative
"half coordinate" view (A, B, C, D), meaning (A + B*i + C*sqrt(2)j +
D*sqrt(2)k) / 2, is exposed for parity checks and is where multiplication
is carried out.

The sublattice spanned by {1, i, sqrt(2)j, sqrt(2)k} (all half coordinates
even) is where the norm literally evaluates the quadratic form on integer
4-tuples; ``is_integral`` tests membership.

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from typing import NamedTuple, Union

OpOther = Union["OrderElement", int]


class HalfCoords(NamedTuple):
    """Doubled standard-basis coordinates: the element (A + Bi + C*sqrt2 j + D*sqrt2 k)/2."""

    A: int
    B: int
    C: int
    D: int


def _check_half_parity(A: int, B: int, C: int, D: int) -> None:
    # Membership condition for the order: A = B and A = C + D (mod 2).
    if (A - B) % 2 or (A - C - D) % 2:
        raise ValueError(
            f"half coordinates ({A},{B},{C},{D}) violate parity: "
            "need A = B (mod 2) and A = C + D (mod 2)"
        )


@dataclass(frozen=True, slots=True)
class OrderElement:
    """A quaternion g1*v1 + g2*v2 + g3*v3 + g4*v4 with integer coordinates.

    Any integer 4-tuple is a valid element (the basis is free).  Supports
    +, -, unary -, * (with another element or an int scalar) and ** with a
    nonnegative integer exponent.  Multiplication is noncommutative.
    """

    g1: int
    g2: int
    g3: int
    g4: int

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_half(cls, A: int, B: int, C: int, D: int) -> "OrderElement":
        """Build from half coordinates, rejecting parity-violating tuples."""
        _check_half_parity(A, B, C, D)
        return cls((A - C - D) // 2, (B - C - D) // 2, C, D)

    @classmethod
    def from_standard(cls, x: int, y: int, z: int, w: int) -> "OrderElement":
        """Build x + y*i + z*sqrt(2)j + w*sqrt(2)k from integer coefficients."""
        return cls.from_half(2 * x, 2 * y, 2 * z, 2 * w)

    @classmethod
    def from_json(cls, obj: dict) -> "OrderElement":
        v = obj["v"]
        if len(v) != 4:
            raise ValueError(f"quaternion JSON needs 4 coordinates, got {v!r}")
        return cls(*(int(c) for c in v))

    # -- views -------------------------------------------------------------

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.g1, self.g2, self.g3, self.g4)

    @property
    def half_coords(self) -> HalfCoords:
        g1, g2, g3, g4 = self.coords
        return HalfCoords(2 * g1 + g3 + g4, 2 * g2 + g3 + g4, g3, g4)

    @property
    def is_integral(self) -> bool:
        """True if the standard coefficients of 1, i, sqrt2 j, sqrt2 k are integers."""
        A, B, C, D = self.half_coords
        return A % 2 == 0 and B % 2 == 0 and C % 2 == 0 and D % 2 == 0

    @property
    def is_zero(self) -> bool:
        return self.coords == (0, 0, 0, 0)

    def standard_coords(self) -> tuple[int, int, int, int]:
        """Integer standard coefficients (x, y, z, w); requires an integral element."""
        A, B, C, D = self.half_coords
        if not self.is_integral:
            raise ValueError(f"{self} has half-integer standard coefficients")
        return (A // 2, B // 2, C // 2, D // 2)

    def to_json(self) -> dict:
        return {"v": list(self.coords)}

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: OpOther) -> "OrderElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return OrderElement(
            self.g1 + other.g1, self.g2 + other.g2, self.g3 + other.g3, self.g4 + other.g4
        )

    __radd__ = __add__

    def __sub__(self, other: OpOther) -> "OrderElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return OrderElement(
            self.g1 - other.g1, self.g2 - other.g2, self.g3 - other.g3, self.g4 - other.g4
        )

    def __rsub__(self, other: OpOther) -> "OrderElement":
        return (-self).__add__(other)

    def __neg__(self) -> "OrderElement":
        return OrderElement(-self.g1, -self.g2, -self.g3, -self.g4)

    def __mul__(self, other: OpOther) -> "OrderElement":
        if isinstance(other, int):
            return OrderElement(
                self.g1 * other, self.g2 * other, self.g3 * other, self.g4 * other
            )
        if not isinstance(other, OrderElement):
            return NotImplemented
        # Multiply in doubled standard coordinates; the division by 2 must be
        # exact (ring closure) and is asserted rather than assumed.
        A, B, C, D = self.half_coords
        E, F, G, H = other.half_coords
        AA = A * E - B * F - 2 * C * G - 2 * D * H
        BB = A * F + B * E + 2 * C * H - 2 * D * G
        CC = A * G - B * H + C * E + D * F
        DD = A * H + B * G - C * F + D * E
        if (AA | BB | CC | DD) & 1:
            raise ArithmeticError(f"non-integral product of {self} and {other}")
        return OrderElement.from_half(AA // 2, BB // 2, CC // 2, DD // 2)

    def __rmul__(self, other: int) -> "OrderElement":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exp: int) -> "OrderElement":
        if exp < 0:
            raise ValueError("negative powers are not defined in the order")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    def conjugate(self) -> "OrderElement":
        """Negate the i, j, k standard coefficients.

        In basis coordinates: (g1, g2, g3, g4) -> (g1+g3+g4, -g2, -g3, -g4).
        An additive involution with conjugate(a*b) = conjugate(b)*conjugate(a).
        """
        return OrderElement(self.g1 + self.g3 + self.g4, -self.g2, -self.g3, -self.g4)

    def norm(self) -> int:
        """The nonnegative integer self * conjugate(self).

        Equals (A^2 + B^2 + 2C^2 + 2D^2)/4 in half coordinates; zero only for
        the zero element.  Multiplicative: norm(a*b) = norm(a)*norm(b).
        """
        g1, g2, g3, g4 = self.coords
        return (
            g1 * g1 + g2 * g2 + g3 * g3 + g4 * g4
            + g1 * g3 + g2 * g3 + g1 * g4 + g2 * g4 + g3 * g4
        )

    def is_unit(self) -> bool:
        return self.norm() == 1

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        return f"[{self.g1},{self.g2},{self.g3},{self.g4}]"


def _coerce(value: OpOther) -> OrderElement:
    if isinstance(value, OrderElement):
        return value
    if isinstance(value, int):
        return OrderElement(value, 0, 0, 0)
    return NotImplemented


ZERO = OrderElement(0, 0, 0, 0)
ONE = OrderElement(1, 0, 0, 0)
I = OrderElement(0, 1, 0, 0)
V3 = OrderElement(0, 0, 1, 0)
V4 = OrderElement(0, 0, 0, 1)
ONE_PLUS_I = OrderElement(1, 1, 0, 0)
SQRT2_J = OrderElement(-1, -1, 2, 0)
SQRT2_K = OrderElement(-1, -1, 0, 2)


def to_half(e: OrderElement) -> HalfCoords:
    return e.half_coords


def from_half(h: HalfCoords | tuple[int, int, int, int]) -> OrderElement:
    return OrderElement.from_half(*h)


# The 24 units: +/- {v1, v2, v3, v4, v3-v1, v3-v2, v4-v3, v4-v1, v4-v2,
# v3-v2-v1, v4-v2-v1, v4+v3-v2-v1}, i.e. in the standard basis
# +/- {1, i, (1 +/- i +/- sqrt2 j)/2, (1 +/- i +/- sqrt2 k)/2,
#      (sqrt2 j +/- sqrt2 k)/2 * ...}.
_POSITIVE_UNITS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 1, 0),
    (0, 0, -1, 1),
    (-1, 0, 0, 1),
    (0, -1, 0, 1),
    (-1, -1, 1, 0),
    (-1, -1, 0, 1),
    (-1, -1, 1, 1),
)


@cache
def units() -> tuple[OrderElement, ...]:
    """The 24 norm-1 elements, sorted by basis coordinates."""
    table = []
    for g in _POSITIVE_UNITS:
        u = OrderElement(*g)
        table.append(u)
        table.append(-u)
    table.sort(key=lambda u: u.coords)
    out = tuple(table)
    assert len(set(out)) == 24 and all(u.is_unit() for u in out)
    return out


def is_unit(e: OrderElement) -> bool:
    return e.is_unit()


def unit_inverse(u: OrderElement) -> OrderElement:
    """The two-sided inverse of a unit (its conjugate)."""
    if not u.is_unit():
        raise ValueError(f"{u} has norm {u.norm()}, not a unit")
    return u.conjugate()


# -- text round trip --------------------------------------------------------

_HALF_TERM = re.compile(r"([+-]?)(\d*)(r2j|r2k|i)?")


def parse(text: str) -> OrderElement:
    """Parse "[g1,g2,g3,g4]" (basis form) or "(A+Bi+Cr2j+Dr2k)/2" (half form).

    The half form uses the tokens ``i``, ``r2j``, ``r2k`` for the units
    i, sqrt(2)j, sqrt(2)k; terms may appear in any order and be omitted.

    Raises:
        ValueError: malformed text, or a parity violation in the half form.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated basis form: {text!r}")
        parts = s[1:-1].split(",")
        if len(parts) != 4:
            raise ValueError(f"basis form needs 4 coordinates: {text!r}")
        try:
            return OrderElement(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"non-integer coordinate in {text!r}") from None
    if s.startswith("(") and s.endswith(")/2"):
        return from_half(_parse_half_body(s[1:-3], text))
    raise ValueError(f"unrecognized quaternion syntax: {text!r}")


def _parse_half_body(body: str, original: str) -> tuple[int, int, int, int]:
    acc = {None: 0, "i": 0, "r2j": 0, "r2k": 0}
    pos = 0
    seen_term = False
    while pos < len(body):
        m = _HALF_TERM.match(body, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed half form near {body[pos:]!r} in {original!r}")
        sign, digits, token = m.groups()
        if not digits and token is None:
            raise ValueError(f"dangling sign in {original!r}")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        acc[token] += value
        pos = m.end()
        seen_term = True
    if not seen_term:
        raise ValueError(f"empty half form: {original!r}")
    return (acc[None], acc["i"], acc["r2j"], acc["r2k"])


def format_element(e: OrderElement) -> str:
    """Canonical text form; parse(format_element(e)) == e."""
    return str(e)


def format_half(e: OrderElement) -> str:
    """Half-coordinate text form "(A+Bi+Cr2j+Dr2k)/2"."""
    A, B, C, D = e.half_coords
    return f"({A}{B:+d}i{C:+d}r2j{D:+d}r2k)/2"
