"""The (1+i)-adic layer: divisibility, small residue systems, primary elements.

1+i has norm 2 and divides an element on the left exactly when it does on
the right, exactly when the element's norm is even.  Repeated peeling gives
the decomposition e = (1+i)^r * (odd part).

An odd element is *primary* when it is congruent to 1 or 1 + 2*v3 modulo
the (two-sided) ideal generated by 2*(1+i).  Each odd element has exactly
one primary associate per side; primary elements are the canonical
representatives used throughout factorization and counting.
"""

from __future__ import annotations

import enum
from typing import Literal

from .core import I, ONE, V3, V4, ZERO, OrderElement, units

ONE_MINUS_I = OrderElement(1, -1, 0, 0)
ONE_PLUS_2V3 = OrderElement(1, 0, 2, 0)

#: Coset representatives modulo (1+i): {0, 1, v3, 1 + v3}.
COSET_REPS_1PI = (ZERO, ONE, V3, ONE + V3)

#: Coset representatives modulo 2: the twelve units taken with positive sign
#: plus the four non-units {0, 1+i, 1+v3+v4, i+v3+v4}.
COSET_REPS_MOD2 = (
    ONE, I, V3, V4,
    V3 - ONE, V3 - I, V4 - V3, V4 - ONE, V4 - I,
    V3 - I - ONE, V4 - I - ONE, V4 + V3 - I - ONE,
    ZERO, ONE + I, ONE + V3 + V4, I + V3 + V4,
)

_MOD2_LOOKUP = {
    tuple(g % 2 for g in rep.coords): rep for rep in COSET_REPS_MOD2
}
assert len(_MOD2_LOOKUP) == 16

#: The four classes of elements congruent to 1 mod 2, taken mod 2*(1+i).
CANONICAL_RESIDUES_2_1PI = (ONE, -ONE, ONE_PLUS_2V3, -ONE_PLUS_2V3)


class PrimaryClass(enum.Enum):
    ONE = "one"
    ONE_PLUS_2V3 = "one_plus_2v3"
    NOT_PRIMARY = "not_primary"


def is_odd(e: OrderElement) -> bool:
    """True exactly when norm(e) is odd."""
    return e.norm() % 2 == 1


def residue_mod_1pi(e: OrderElement) -> OrderElement:
    """The representative in {0, 1, v3, 1+v3} congruent to e modulo (1+i)."""
    s1 = (e.g1 + e.g2 + e.g4) % 2
    s2 = (e.g3 + e.g4) % 2
    return COSET_REPS_1PI[s1 + 2 * s2]


def _halve(e: OrderElement) -> OrderElement | None:
    if any(g % 2 for g in e.coords):
        return None
    return OrderElement(e.g1 // 2, e.g2 // 2, e.g3 // 2, e.g4 // 2)


def divide_by_1pi(e: OrderElement, side: Literal["left", "right"] = "right") -> OrderElement:
    """The exact cofactor h with e = h*(1+i) ("right") or e = (1+i)*h ("left").

    Raises:
        ValueError: norm(e) is odd, so 1+i does not divide e.
    """
    if is_odd(e):
        raise ValueError(f"{e} has odd norm; not divisible by 1+i")
    product = e * ONE_MINUS_I if side == "right" else ONE_MINUS_I * e
    h = _halve(product)
    if h is None:
        raise ArithmeticError(f"even-norm element {e} not divisible by 1+i")
    return h


def valuation_1pi(e: OrderElement) -> tuple[int, OrderElement]:
    """Write e = (1+i)^r * b with b odd; returns (r, b).

    r equals the 2-adic valuation of norm(e).

    Raises:
        ValueError: e == 0.
    """
    if e.is_zero:
        raise ValueError("the zero element has no (1+i)-adic valuation")
    r = 0
    while not is_odd(e):
        e = divide_by_1pi(e, "left")
        r += 1
    return r, e


def residue_mod_2(e: OrderElement) -> OrderElement:
    """The unique representative of e in the 16-element residue system mod 2."""
    return _MOD2_LOOKUP[tuple(g % 2 for g in e.coords)]


def divisible_by_2_1pi(e: OrderElement) -> bool:
    """Does the ideal (2*(1+i)) contain e?  (Sidedness is irrelevant.)

    Constructive: e/2 must be exact in coordinates, and the quotient must be
    divisible by 1+i (even norm).
    """
    h = _halve(e)
    return h is not None and not is_odd(h)


def congruent_mod_2_1pi(a: OrderElement, b: OrderElement) -> bool:
    return divisible_by_2_1pi(a - b)


def primary_class(e: OrderElement) -> PrimaryClass:
    """Classify e modulo 2*(1+i) as 1, as 1 + 2*v3, or as neither."""
    if divisible_by_2_1pi(e - ONE):
        return PrimaryClass.ONE
    if divisible_by_2_1pi(e - ONE_PLUS_2V3):
        return PrimaryClass.ONE_PLUS_2V3
    return PrimaryClass.NOT_PRIMARY


def is_primary(e: OrderElement) -> bool:
    return primary_class(e) is not PrimaryClass.NOT_PRIMARY


def primary_associate(
    b: OrderElement, side: Literal["left", "right"] = "right"
) -> tuple[OrderElement, OrderElement]:
    """The unique unit u and primary c with c = b*u ("right") or c = u*b ("left").

    Scans all 24 units, which doubles as a runtime check of uniqueness.

    Raises:
        ValueError: b has even norm (only odd elements have primary associates).
        ArithmeticError: zero or several units qualify (impossible).
    """
    if not is_odd(b):
        raise ValueError(f"{b} has even norm; no primary associate exists")
    matches = []
    for u in units():
        c = b * u if side == "right" else u * b
        if is_primary(c):
            matches.append((u, c))
    if len(matches) != 1:
        raise ArithmeticError(
            f"{len(matches)} primary associates found for {b} ({side}); expected exactly 1"
        )
    return matches[0]


def unit_congruences_mod2(b: OrderElement) -> tuple[OrderElement, OrderElement]:
    """Units (u, u1) with b*u = 1 (mod 2) and u1*b = 1 (mod 2).

    The congruence determines the unit up to sign; of the two solutions the
    one with smaller norm(b*u - 1) is returned (coordinate order on ties).

    Raises:
        ValueError: b has even norm.
    """
    if not is_odd(b):
        raise ValueError(f"{b} has even norm; not congruent to a unit mod 2")

    def pick(prod):
        hits = [u for u in units() if _halve(prod(u) - ONE) is not None]
        if not hits:
            raise ArithmeticError(f"no unit congruence mod 2 for {b}")
        return min(hits, key=lambda u: ((prod(u) - ONE).norm(), u.coords))

    return pick(lambda u: b * u), pick(lambda u: u * b)


def residue_mod_2_1pi(e: OrderElement) -> OrderElement | None:
    """The representative of e in {1, -1, 1+2v3, -1-2v3} modulo 2*(1+i).

    Every element congruent to 1 mod 2 falls in exactly one of these four
    classes; anything else returns None.
    """
    for rep in CANONICAL_RESIDUES_2_1PI:
        if divisible_by_2_1pi(e - rep):
            return rep
    return None
