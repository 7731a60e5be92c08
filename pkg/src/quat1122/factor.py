"""Prime quaternions and unique factorization into primary primes.

An element is prime exactly when its norm is a rational prime.  Up to the
dyadic part (powers of 1+i), a unit, and an integer content, every nonzero
element is a product of *primary* primes, one per rational prime factor of
the norm, and the product can be rearranged to follow any ordering of those
rational primes:

    x = (1+i)^r * u * (sign * content) * pi_1 * pi_2 * ... * pi_k

The primary prime attached to a given norm-p slot is extracted as a
one-sided GCD with p, which the Euclidean layer normalizes to its primary
associate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd

from .core import ONE, ONE_PLUS_I, OrderElement
from .dyadic import (
    PrimaryClass,
    is_primary,
    primary_associate,
    primary_class,
    valuation_1pi,
)
from .euclid import gcd as quat_gcd
from .intarith import factorize, is_prime
from .modm import is_primitive_to_m
from .repcount import enumerate_norm_solutions


@dataclass(frozen=True, slots=True)
class PrimaryPrime:
    """A prime of the order in canonical form: primary, with rational prime norm.

    For p = 2 the canonical prime is 1+i (no primary associate exists in the
    even world); all other primes here are odd and primary.
    """

    element: OrderElement
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not a rational prime")
        if self.element.norm() != self.p:
            raise ValueError(f"{self.element} has norm {self.element.norm()}, not {self.p}")
        if self.p == 2:
            if self.element != ONE_PLUS_I:
                raise ValueError("the canonical norm-2 prime is 1+i")
        elif not is_primary(self.element):
            raise ValueError(f"{self.element} is not primary")


@dataclass(frozen=True, slots=True)
class Factorization:
    """x = (1+i)^r * unit * (sign * content) * primes[0] * primes[1] * ...

    ``content`` is the odd positive integer coordinate gcd of the primary
    part and is reported unfactored; ``primes`` multiply left to right.
    """

    r: int
    unit: OrderElement
    sign: int
    content: int
    primes: tuple[PrimaryPrime, ...]

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("dyadic exponent must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +/-1, got {self.sign}")
        if self.content < 1 or self.content % 2 == 0:
            raise ValueError(f"content must be odd and positive, got {self.content}")
        if not self.unit.is_unit():
            raise ValueError(f"{self.unit} is not a unit")

    def reassemble(self) -> OrderElement:
        out = (ONE_PLUS_I ** self.r) * self.unit * (self.sign * self.content)
        for pi in self.primes:
            out = out * pi.element
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "unit": self.unit.to_json(),
            "sign": self.sign,
            "content": self.content,
            "primes": [pi.element.to_json() for pi in self.primes],
        }


def is_prime_quat(e: OrderElement) -> bool:
    """Prime in the order <=> the norm is a rational prime."""
    return is_prime(e.norm())


def norm2_primes() -> tuple[OrderElement, ...]:
    """All 24 primes of norm 2 (the one-sided associates of 1+i)."""
    return enumerate_norm_solutions(2)


def _check_lift_preconditions(f: OrderElement, p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd rational prime")
    if not is_primitive_to_m(f, p):
        raise ValueError(f"{f} is not primitive to {p}")
    if f.norm() % p:
        raise ValueError(f"norm {f.norm()} of {f} is not divisible by {p}")


def lift_nondegenerate(f: OrderElement, p: int) -> OrderElement:
    """A representative of f mod p whose norm is divisible by p but not p^2.

    If norm(f) already has p-valuation 1 the input is returned unchanged.
    Otherwise one coordinate is shifted by a multiple of p: the norm changes
    by p times a linear form in the shift, and primitivity guarantees some
    coefficient of that form is invertible mod p.
    """
    _check_lift_preconditions(f, p)
    if f.norm() % (p * p):
        return f
    f1, f2, f3, f4 = f.coords
    gradient = (
        2 * f1 + f3 + f4,
        2 * f2 + f3 + f4,
        f1 + f2 + 2 * f3 + f4,
        f1 + f2 + f3 + 2 * f4,
    )
    for index, coeff in enumerate(gradient):
        if coeff % p:
            t = pow(coeff, -1, p)
            shift = [0, 0, 0, 0]
            shift[index] = p * t
            lifted = f + OrderElement(*shift)
            if lifted.norm() % p == 0 and lifted.norm() % (p * p):
                return lifted
            raise ArithmeticError(f"lift of {f} at p={p} missed its target valuation")
    raise ArithmeticError(f"no invertible gradient coefficient for {f} mod {p}")


def primary_prime_from(f: OrderElement, p: int) -> PrimaryPrime:
    """The primary prime of norm p canonically attached to f.

    Computed as the right GCD of a nondegenerate lift of f with p; the result
    does not depend on the choice of lift, and elements f, q*f (q invertible
    mod p) map to the same prime.
    """
    lifted = lift_nondegenerate(f, p)
    g = quat_gcd(lifted, OrderElement(p, 0, 0, 0), side="right").gcd
    if g.norm() != p:
        raise ArithmeticError(
            f"right gcd of lift and {p} has norm {g.norm()}, expected {p}"
        )
    return PrimaryPrime(g, p)


def p_conjugate(pi: PrimaryPrime) -> PrimaryPrime:
    """The signed conjugate that stays primary; an involution.

    Equals conjugate(pi) when pi = 1 mod 2(1+i) (then p = 1 mod 4) and
    -conjugate(pi) otherwise (then p = 3 mod 4); the product of pi with its
    p-conjugate is +p respectively -p.
    """
    if pi.p == 2:
        raise ValueError("p-conjugation is defined for odd primary primes")
    cls = primary_class(pi.element)
    if cls is PrimaryClass.ONE:
        return PrimaryPrime(pi.element.conjugate(), pi.p)
    return PrimaryPrime(-pi.element.conjugate(), pi.p)


def primary_primes_of_norm(p: int) -> tuple[PrimaryPrime, ...]:
    """All primary primes of norm p (an odd rational prime), sorted; p+1 of them."""
    if p == 2:
        raise ValueError(
            "no primary primes of norm 2: the norm-2 primes are the 24 "
            "associates of 1+i, reported by norm2_primes()"
        )
    if not is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    return tuple(
        PrimaryPrime(e, p) for e in enumerate_norm_solutions(p) if is_primary(e)
    )


def is_primitive(c: OrderElement) -> bool:
    """Primary with coprime coordinates: the inputs of the decomposition theorem."""
    return is_primary(c) and int_gcd(*c.coords) == 1


def _exact_left_divide(pi: OrderElement, c: OrderElement) -> OrderElement:
    # h with c = pi * h, via conj(pi) * c / norm(pi); exactness asserted.
    num = pi.conjugate() * c
    n = pi.norm()
    if any(g % n for g in num.coords):
        raise ArithmeticError(f"{pi} does not left-divide {c}")
    return OrderElement(*(g // n for g in num.coords))


def factor_primitive(c: OrderElement, prime_order: list[int]) -> list[PrimaryPrime]:
    """Factor a primitive element into primary primes following prime_order.

    prime_order must list the rational prime factorization of norm(c), with
    multiplicity, in the desired left-to-right order; any ordering works.
    Each step takes the primary left GCD of the running cofactor with the
    next prime and divides it off on the left.

    Raises:
        ValueError: c not primitive, or prime_order inconsistent with norm(c).
        ArithmeticError: a peeled GCD has the wrong norm or the final
            cofactor differs from 1 (fatal invariant violations).
    """
    if not is_primitive(c):
        raise ValueError(f"{c} is not primitive (primary with coprime coordinates)")
    expected = sorted(
        p for p, e in factorize(c.norm()).items() for _ in range(e)
    )
    if sorted(prime_order) != expected:
        raise ValueError(
            f"prime order {prime_order} does not factor norm {c.norm()}"
        )
    out: list[PrimaryPrime] = []
    cofactor = c
    for p in prime_order:
        g = quat_gcd(cofactor, OrderElement(p, 0, 0, 0), side="left").gcd
        if g.norm() != p:
            raise ArithmeticError(
                f"left gcd with {p} has norm {g.norm()} while factoring {c}"
            )
        out.append(PrimaryPrime(g, p))
        cofactor = _exact_left_divide(g, cofactor)
    if cofactor != ONE:
        raise ArithmeticError(f"factorization of {c} left cofactor {cofactor}, not 1")
    return out


def full_factor(x: OrderElement) -> Factorization:
    """Canonical factorization of any nonzero element; reassembles exactly.

    The dyadic part comes off first, then the unique unit/primary split of
    the odd part, then the integer content with its sign, and finally the
    primitive part is factored with primes in increasing norm order.
    """
    if x.is_zero:
        raise ValueError("cannot factor the zero element")
    r, b = valuation_1pi(x)
    w, c = primary_associate(b, "left")
    unit = w.conjugate()
    content = int_gcd(*c.coords)
    d = OrderElement(*(g // content for g in c.coords))
    if is_primary(d):
        sign, primitive_part = 1, d
    elif is_primary(-d):
        sign, primitive_part = -1, -d
    else:
        raise ArithmeticError(f"neither +/-{d} is primary while factoring {x}")
    prime_order = sorted(
        p for p, e in factorize(primitive_part.norm()).items() for _ in range(e)
    )
    primes = factor_primitive(primitive_part, prime_order)
    return Factorization(r=r, unit=unit, sign=sign, content=content, primes=tuple(primes))
