"""Norm-Euclidean division and one-sided greatest common divisors.

The order admits division with remainder on either side: for b != 0 there
is a quotient q with norm(a - q*b) < norm(b) (respectively norm(a - b*q)
< norm(b)).  The quotient is found by rounding the exact quotient
a * conj(b) / norm(b) coordinatewise and searching the 81 neighbouring
lattice points; success of that search is asserted at runtime.

GCDs carry Bezout data.  For the right GCD d of (a, b):

    a = a' * d,   b = b' * d,   d = x*a + y*b

and symmetrically for the left GCD (d = a*x + b*y, d a left divisor).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .core import ONE, ZERO, OrderElement, units
from .dyadic import primary_associate
from .intarith import round_half_even

Side = Literal["left", "right"]

_OFFSETS = tuple(itertools.product((-1, 0, 1), repeat=4))


@dataclass(frozen=True, slots=True)
class DivisionResult:
    quotient: OrderElement
    remainder: OrderElement
    side: Side


@dataclass(frozen=True, slots=True)
class GcdResult:
    gcd: OrderElement
    cofactors: tuple[OrderElement, OrderElement]
    side: Side


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def div_rem(a: OrderElement, b: OrderElement, side: Side = "right") -> DivisionResult:
    """Divide with remainder: a = q*b + r ("right") or a = b*q + r ("left").

    Deterministic: among the 81 candidate quotients around the rounded exact
    quotient, the one minimizing norm(r) wins, ties broken by the smallest
    quotient coordinates.

    Raises:
        ZeroDivisionError: b == 0.
        ArithmeticError: no candidate beats norm(b) (cannot happen in a
            norm-Euclidean ring; kept as a runtime check).
    """
    _check_side(side)
    nb = b.norm()
    if nb == 0:
        raise ZeroDivisionError("division by zero quaternion")
    numerator = a * b.conjugate() if side == "right" else b.conjugate() * a
    base = tuple(round_half_even(g, nb) for g in numerator.coords)

    best: tuple[int, tuple[int, int, int, int]] | None = None
    best_q = best_r = ZERO
    for off in _OFFSETS:
        q = OrderElement(base[0] + off[0], base[1] + off[1], base[2] + off[2], base[3] + off[3])
        r = a - (q * b if side == "right" else b * q)
        key = (r.norm(), q.coords)
        if best is None or key < best:
            best, best_q, best_r = key, q, r
    if best is None or best[0] >= nb:
        raise ArithmeticError(
            f"Euclidean quotient search failed for {a} / {b} ({side}): "
            f"best remainder norm {best and best[0]} >= {nb}"
        )
    return DivisionResult(best_q, best_r, side)


def _normalize(d: OrderElement, x: OrderElement, y: OrderElement, side: Side):
    # Associates preserving the divisor side: u*d for a right gcd, d*u for a
    # left gcd.  Odd gcds get their unique primary associate; even ones the
    # lexicographically smallest coordinate tuple.
    if d.norm() % 2 == 1:
        w, c = primary_associate(d, "left" if side == "right" else "right")
    else:
        if side == "right":
            w = min(units(), key=lambda u: (u * d).coords)
            c = w * d
        else:
            w = min(units(), key=lambda u: (d * u).coords)
            c = d * w
    if side == "right":
        return c, w * x, w * y
    return c, x * w, y * w


def gcd(a: OrderElement, b: OrderElement, side: Side = "right") -> GcdResult:
    """One-sided GCD by the Euclidean algorithm, with exact Bezout cofactors.

    The right GCD divides both inputs on the right and satisfies
    d = x*a + y*b; the left GCD divides on the left with d = a*x + b*y.
    Output is normalized to the primary associate when odd, else to the
    associate with smallest coordinates.

    Raises:
        ValueError: both arguments are zero.
    """
    _check_side(side)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    r0, x0, y0 = a, ONE, ZERO
    r1, x1, y1 = b, ZERO, ONE
    while not r1.is_zero:
        q = div_rem(r0, r1, side).quotient
        if side == "right":
            r0, x0, y0, r1, x1, y1 = r1, x1, y1, r0 - q * r1, x0 - q * x1, y0 - q * y1
        else:
            r0, x0, y0, r1, x1, y1 = r1, x1, y1, r0 - r1 * q, x0 - x1 * q, y0 - y1 * q
    d, x, y = _normalize(r0, x0, y0, side)
    return GcdResult(d, (x, y), side)
