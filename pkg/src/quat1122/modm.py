"""Residues modulo odd m and the isomorphism onto 2x2 matrices over Z/m.

For odd m every element of the order is congruent mod m to a unique

    q1 + q2*i + q3*sqrt(2)j + q4*sqrt(2)k,     0 <= q_i < m,

so the quotient ring has m^4 elements.  Picking (r, s) with
2^-1 + r^2 + s^2 = 0 (mod m) yields a ring isomorphism tau onto the full
matrix ring M_2(Z/m) that carries the norm to the determinant.  The
counting functions at the bottom give the number of residues that are
primitive to m with norm divisible by m (psi) and the number with norm
congruent to 1, each with an exact formula and an exhaustive enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd

from .core import OrderElement
from .intarith import factorize, is_prime


def _check_odd_modulus(m: int) -> None:
    if m < 1 or m % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {m}")


@dataclass(frozen=True, slots=True)
class ResidueElement:
    """q1 + q2*i + q3*sqrt(2)j + q4*sqrt(2)k with coordinates reduced mod m."""

    m: int
    q1: int
    q2: int
    q3: int
    q4: int

    def __post_init__(self):
        _check_odd_modulus(self.m)
        for q in (self.q1, self.q2, self.q3, self.q4):
            if not 0 <= q < max(self.m, 1):
                raise ValueError(f"coordinate {q} not reduced mod {self.m}")

    @classmethod
    def make(cls, m: int, q1: int, q2: int, q3: int, q4: int) -> "ResidueElement":
        return cls(m, q1 % m, q2 % m, q3 % m, q4 % m)

    @classmethod
    def zero(cls, m: int) -> "ResidueElement":
        return cls.make(m, 0, 0, 0, 0)

    @classmethod
    def one(cls, m: int) -> "ResidueElement":
        return cls.make(m, 1, 0, 0, 0)

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.q1, self.q2, self.q3, self.q4)

    def _same_modulus(self, other: "ResidueElement") -> None:
        if self.m != other.m:
            raise ValueError(f"mismatched moduli {self.m} and {other.m}")

    def __add__(self, other: "ResidueElement") -> "ResidueElement":
        self._same_modulus(other)
        return ResidueElement.make(
            self.m, self.q1 + other.q1, self.q2 + other.q2,
            self.q3 + other.q3, self.q4 + other.q4,
        )

    def __neg__(self) -> "ResidueElement":
        return ResidueElement.make(self.m, -self.q1, -self.q2, -self.q3, -self.q4)

    def __sub__(self, other: "ResidueElement") -> "ResidueElement":
        return self.__add__(-other)

    def __mul__(self, other: "ResidueElement") -> "ResidueElement":
        self._same_modulus(other)
        u1, u2, u3, u4 = self.coords
        v1, v2, v3, v4 = other.coords
        return ResidueElement.make(
            self.m,
            u1 * v1 - u2 * v2 - 2 * u3 * v3 - 2 * u4 * v4,
            u1 * v2 + u2 * v1 + 2 * u3 * v4 - 2 * u4 * v3,
            u1 * v3 - u2 * v4 + u3 * v1 + u4 * v2,
            u1 * v4 + u2 * v3 - u3 * v2 + u4 * v1,
        )

    def scale(self, k: int) -> "ResidueElement":
        return ResidueElement.make(
            self.m, k * self.q1, k * self.q2, k * self.q3, k * self.q4
        )

    def norm(self) -> int:
        q1, q2, q3, q4 = self.coords
        return (q1 * q1 + q2 * q2 + 2 * q3 * q3 + 2 * q4 * q4) % self.m

    def is_primitive(self) -> bool:
        return int_gcd(self.q1, self.q2, self.q3, self.q4, self.m) == 1

    def lift(self) -> OrderElement:
        """The canonical preimage in the order (integral, coordinates in [0, m))."""
        return OrderElement.from_half(2 * self.q1, 2 * self.q2, 2 * self.q3, 2 * self.q4)


def reduce_mod_m(e: OrderElement, m: int) -> ResidueElement:
    """Reduce an element of the order into the canonical residue system mod odd m.

    Scaling the v3, v4 coordinates by the even number 1+m moves the element
    into the integral sublattice without changing it mod m; the standard
    coordinates are then reduced.
    """
    _check_odd_modulus(m)
    g3 = (1 + m) * e.g3
    g4 = (1 + m) * e.g4
    A = 2 * e.g1 + g3 + g4
    B = 2 * e.g2 + g3 + g4
    return ResidueElement.make(m, A // 2, B // 2, g3 // 2, g4 // 2)


def iter_residues(m: int):
    """All m^4 residues mod m, lexicographic in (q1, q2, q3, q4)."""
    _check_odd_modulus(m)
    for q1 in range(m):
        for q2 in range(m):
            for q3 in range(m):
                for q4 in range(m):
                    yield ResidueElement(m, q1, q2, q3, q4)


@dataclass(frozen=True, slots=True)
class RSParams:
    """Parameters (r, s) with 2^-1 + r^2 + s^2 = 0 (mod m)."""

    m: int
    r: int
    s: int

    def __post_init__(self):
        _check_odd_modulus(self.m)
        if not (0 <= self.r < max(self.m, 1) and 0 <= self.s < max(self.m, 1)):
            raise ValueError(f"(r, s) = ({self.r}, {self.s}) not reduced mod {self.m}")
        inv2 = pow(2, -1, self.m)
        if (inv2 + self.r * self.r + self.s * self.s) % self.m:
            raise ValueError(
                f"2^-1 + r^2 + s^2 != 0 mod {self.m} for (r, s) = ({self.r}, {self.s})"
            )


def solve_rs(m: int) -> RSParams:
    """The lexicographically smallest (r, s) in [0, m)^2 solving the congruence.

    A solution always exists for odd m; exhaustive search cannot fail.
    """
    _check_odd_modulus(m)
    inv2 = pow(2, -1, m)
    for r in range(m):
        rr = (inv2 + r * r) % m
        for s in range(m):
            if (rr + s * s) % m == 0:
                return RSParams(m, r, s)
    raise ArithmeticError(f"no (r, s) found for m = {m}; this cannot happen")


@dataclass(frozen=True, slots=True)
class XiBasis:
    """The four residues spanning the matrix units, validated on construction."""

    params: RSParams
    xi1: ResidueElement
    xi2: ResidueElement
    xi3: ResidueElement
    xi4: ResidueElement


def xi_basis(params: RSParams) -> XiBasis:
    """Build xi1..xi4 from (r, s) and verify all sixteen product relations.

    xi1 = 1 + r*sqrt2 j + s*sqrt2 k        xi2 = i + s*sqrt2 j - r*sqrt2 k
    xi3 = -i + s*sqrt2 j - r*sqrt2 k       xi4 = 1 - r*sqrt2 j - s*sqrt2 k

    Raises:
        ArithmeticError: a product relation fails (would signal an
            arithmetic bug, not bad input).
    """
    m, r, s = params.m, params.r, params.s
    x1 = ResidueElement.make(m, 1, 0, r, s)
    x2 = ResidueElement.make(m, 0, 1, s, -r)
    x3 = ResidueElement.make(m, 0, -1, s, -r)
    x4 = ResidueElement.make(m, 1, 0, -r, -s)
    zero = ResidueElement.zero(m)
    vanishing = [
        x1 * x3, x1 * x4, x2 * x1, x3 * x4, x4 * x1, x4 * x2, x2 * x2, x3 * x3,
    ]
    doubling = [
        (x1 * x1, x1), (x2 * x3, x1), (x1 * x2, x2), (x2 * x4, x2),
        (x3 * x1, x3), (x4 * x3, x3), (x3 * x2, x4), (x4 * x4, x4),
    ]
    if any(p != zero for p in vanishing) or any(p != x.scale(2) for p, x in doubling):
        raise ArithmeticError(f"xi relations fail for {params}")
    return XiBasis(params, x1, x2, x3, x4)


@dataclass(frozen=True, slots=True)
class MatrixModM:
    """A 2x2 matrix [[a, b], [c, d]] over Z/m."""

    m: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        _check_odd_modulus(self.m)
        for entry in (self.a, self.b, self.c, self.d):
            if not 0 <= entry < max(self.m, 1):
                raise ValueError(f"entry {entry} not reduced mod {self.m}")

    @classmethod
    def make(cls, m: int, a: int, b: int, c: int, d: int) -> "MatrixModM":
        return cls(m, a % m, b % m, c % m, d % m)

    @classmethod
    def identity(cls, m: int) -> "MatrixModM":
        return cls.make(m, 1, 0, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def _same_modulus(self, other: "MatrixModM") -> None:
        if self.m != other.m:
            raise ValueError(f"mismatched moduli {self.m} and {other.m}")

    def __add__(self, other: "MatrixModM") -> "MatrixModM":
        self._same_modulus(other)
        return MatrixModM.make(
            self.m, self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __mul__(self, other: "MatrixModM") -> "MatrixModM":
        self._same_modulus(other)
        return MatrixModM.make(
            self.m,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.m

    def is_primitive(self) -> bool:
        return int_gcd(self.a, self.b, self.c, self.d, self.m) == 1


def tau(q: ResidueElement, params: RSParams) -> MatrixModM:
    """The ring isomorphism onto M_2(Z/m); det(tau(q)) = norm(q) mod m."""
    if q.m != params.m:
        raise ValueError(f"residue mod {q.m} but parameters mod {params.m}")
    m, r, s = params.m, params.r, params.s
    q1, q2, q3, q4 = q.coords
    return MatrixModM.make(
        m,
        q1 - 2 * r * q3 - 2 * s * q4,
        q2 - 2 * s * q3 + 2 * r * q4,
        -q2 - 2 * s * q3 + 2 * r * q4,
        q1 + 2 * r * q3 + 2 * s * q4,
    )


def tau_inv(mat: MatrixModM, params: RSParams) -> ResidueElement:
    """The exact two-sided inverse of tau."""
    if mat.m != params.m:
        raise ValueError(f"matrix mod {mat.m} but parameters mod {params.m}")
    m, r, s = params.m, params.r, params.s
    a, b, c, d = mat.entries
    inv2 = pow(2, -1, m)
    return ResidueElement.make(
        m,
        (a + d) * inv2,
        (b - c) * inv2,
        (r * (a - d) + s * (b + c)) * inv2,
        (s * (a - d) - r * (b + c)) * inv2,
    )


def is_primitive_to_m(e: OrderElement, m: int) -> bool:
    """gcd of the four basis coordinates with m equals 1."""
    _check_odd_modulus(m)
    return int_gcd(e.g1, e.g2, e.g3, e.g4, m) == 1


# -- counting ----------------------------------------------------------------

def count_psi(m: int) -> int:
    """Residues primitive to m with norm = 0 mod m:  m^3 * prod (1-p^-2)(1+p^-1)."""
    _check_odd_modulus(m)
    total = 1
    for p, e in factorize(m).items():
        total *= p ** (3 * e - 3) * (p * p - 1) * (p + 1)
    return total


def count_psi_enum(m: int) -> int:
    """Exhaustive count over all m^4 residues (intended for small m)."""
    _check_odd_modulus(m)
    count = 0
    for q1 in range(m):
        for q2 in range(m):
            for q3 in range(m):
                base = q1 * q1 + q2 * q2 + 2 * q3 * q3
                g123 = int_gcd(q1, q2, q3, m)
                for q4 in range(m):
                    if (base + 2 * q4 * q4) % m == 0 and int_gcd(g123, q4) == 1:
                        count += 1
    return count


def count_norm1(m: int) -> int:
    """Residues with norm = 1 mod m:  m^3 * prod (1 - p^-2)."""
    _check_odd_modulus(m)
    total = 1
    for p, e in factorize(m).items():
        total *= p ** (3 * e - 2) * (p * p - 1)
    return total


def count_norm1_enum(m: int) -> int:
    _check_odd_modulus(m)
    target = 1 % m
    count = 0
    for q1 in range(m):
        for q2 in range(m):
            for q3 in range(m):
                base = q1 * q1 + q2 * q2 + 2 * q3 * q3
                for q4 in range(m):
                    if (base + 2 * q4 * q4) % m == target:
                        count += 1
    return count


def count_annihilator_enum(f: ResidueElement, p: int) -> int:
    """Number of residues x mod p with x*f = 0; equals p^2 for valid f.

    Raises:
        ValueError: p not an odd prime, f not primitive to p, or norm(f)
            not divisible by p.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    if f.m != p:
        raise ValueError(f"residue mod {f.m} does not match p = {p}")
    if not f.is_primitive():
        raise ValueError(f"{f} is not primitive to {p}")
    if f.norm() % p:
        raise ValueError(f"norm of {f} is not divisible by {p}")
    zero = ResidueElement.zero(p)
    return sum(1 for x in iter_residues(p) if x * f == zero)
