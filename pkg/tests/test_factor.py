import random

import pytest

from quat1122 import (
    Factorization,
    OrderElement,
    PrimaryPrime,
    enumerate_norm_solutions,
    factor_primitive,
    full_factor,
    is_primary,
    is_prime_quat,
    norm2_primes,
    p_conjugate,
    primary_prime_from,
    primary_primes_of_norm,
    units,
)
from quat1122.core import I, ONE, ONE_PLUS_I, V3, ZERO
from quat1122.factor import is_primitive, lift_nondegenerate
from quat1122.modm import iter_residues


def ordp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def primitive_residue_reps(p):
    """Order elements representing the residues primitive to p with norm = 0 mod p."""
    return [q.lift() for q in iter_residues(p)
            if q.is_primitive() and q.norm() % p == 0]


# -- primality ---------------------------------------------------------------

def test_is_prime_quat():
    assert is_prime_quat(ONE_PLUS_I)
    assert not is_prime_quat(OrderElement(2, 0, 0, 0))
    assert not is_prime_quat(V3)
    assert not is_prime_quat(ZERO)


def test_norm2_primes_are_the_associates_of_1pi():
    primes = norm2_primes()
    assert len(primes) == 24
    assert set(primes) == {ONE_PLUS_I * u for u in units()}
    assert set(primes) == {u * ONE_PLUS_I for u in units()}


# -- the nondegenerate lift --------------------------------------------------

def test_lift_preserves_residue_and_fixes_valuation():
    p = 3
    for f in primitive_residue_reps(p):
        lifted = lift_nondegenerate(f, p)
        assert ordp(lifted.norm(), p) == 1
        assert all((a - b) % p == 0 for a, b in zip(lifted.coords, f.coords))


def test_lift_returns_input_when_already_good():
    pi = primary_primes_of_norm(5)[0].element
    assert lift_nondegenerate(pi, 5) == pi


def test_lift_rejects_bad_input():
    with pytest.raises(ValueError):
        lift_nondegenerate(3 * V3, 3)  # not primitive to 3
    with pytest.raises(ValueError):
        lift_nondegenerate(ONE, 3)  # norm not divisible by 3
    with pytest.raises(ValueError):
        lift_nondegenerate(ONE_PLUS_I, 2)  # p must be odd


# -- the gcd-to-primary-prime map ---------------------------------------------

def test_prime_from_reproduces_primary_primes():
    for p in (3, 5, 7):
        for pi in primary_primes_of_norm(p):
            assert primary_prime_from(pi.element, p) == pi


def test_prime_from_is_lift_independent():
    p = 5
    rng = random.Random(50)
    for f in primitive_residue_reps(p)[:40]:
        base = primary_prime_from(f, p)
        # congruent representative: shift by random multiples of p
        shifted = f + p * OrderElement(*(rng.randint(-3, 3) for _ in range(4)))
        assert primary_prime_from(shifted, p) == base


def test_prime_from_constant_on_left_multiples():
    p = 3
    rng = random.Random(51)
    for f in primitive_residue_reps(p)[:30]:
        base = primary_prime_from(f, p)
        while True:
            q = OrderElement(*(rng.randint(-5, 5) for _ in range(4)))
            if q.norm() % p:
                break
        assert primary_prime_from(q * f, p) == base


def test_prime_from_fibers():
    # the map onto primary primes of norm p has p+1 fibers of size p^2 - 1
    for p in (3, 5):
        fibers = {}
        for q in iter_residues(p):
            if q.is_primitive() and q.norm() % p == 0:
                pi = primary_prime_from(q.lift(), p)
                fibers.setdefault(pi, []).append(q)
        assert len(fibers) == p + 1
        assert all(len(v) == p * p - 1 for v in fibers.values())
        assert set(fibers) == set(primary_primes_of_norm(p))


# -- p-conjugation -----------------------------------------------------------

def test_p_conjugate_sign_matches_p_mod_4():
    for p in (3, 5, 7, 11, 13):
        for pi in primary_primes_of_norm(p):
            pc = p_conjugate(pi)
            assert is_primary(pc.element)
            product = pi.element * pc.element
            if p % 4 == 1:
                assert pc.element == pi.element.conjugate()
                assert product == OrderElement(p, 0, 0, 0)
            else:
                assert pc.element == -pi.element.conjugate()
                assert product == OrderElement(-p, 0, 0, 0)
            assert p_conjugate(pc) == pi


def test_p_conjugate_rejects_norm_2():
    with pytest.raises(ValueError):
        p_conjugate(PrimaryPrime(ONE_PLUS_I, 2))


# -- prime enumeration -------------------------------------------------------

@pytest.mark.parametrize("p,count", [(3, 4), (5, 6), (7, 8), (11, 12), (13, 14)])
def test_primary_prime_counts(p, count):
    primes = primary_primes_of_norm(p)
    assert len(primes) == count
    for pi in primes:
        assert pi.element.norm() == p and is_primary(pi.element)


def test_all_primes_of_norm_p():
    # every element of prime norm is prime; 24 per primary prime
    for p in (3, 5):
        all_of_norm_p = enumerate_norm_solutions(p)
        assert len(all_of_norm_p) == 24 * (p + 1)
        assert all(is_prime_quat(e) for e in all_of_norm_p)


def test_primes_of_norm_rejects():
    with pytest.raises(ValueError):
        primary_primes_of_norm(2)
    with pytest.raises(ValueError):
        primary_primes_of_norm(9)


def test_primary_prime_validates():
    with pytest.raises(ValueError):
        PrimaryPrime(V3, 3)  # norm 1, not 3
    with pytest.raises(ValueError):
        PrimaryPrime(OrderElement(1, 2, 0, 0), 5)  # norm 5 but not primary


# -- factoring primitive elements ---------------------------------------------

def test_factor_primitive_trivial_cases():
    assert factor_primitive(ONE, []) == []
    pi = primary_primes_of_norm(7)[2]
    assert factor_primitive(pi.element, [7]) == [pi]


def test_norm15_products_are_all_primitives():
    # products pi3 * pi5 exhaust the primitives of norm 15, and factoring
    # under either prime order recovers a valid decomposition
    threes = primary_primes_of_norm(3)
    fives = primary_primes_of_norm(5)
    products = {}
    for a in threes:
        for b in fives:
            c = a.element * b.element
            assert is_primitive(c)
            products[c] = (a, b)
    primitives = [e for e in enumerate_norm_solutions(15) if is_primitive(e)]
    assert set(products) == set(primitives)

    for c, (a, b) in products.items():
        assert factor_primitive(c, [3, 5]) == [a, b]
        chi5, chi3 = factor_primitive(c, [5, 3])
        assert chi5.p == 5 and chi3.p == 3
        assert chi5.element * chi3.element == c


def test_factor_primitive_rejects_bad_input():
    with pytest.raises(ValueError):
        factor_primitive(OrderElement(3, 0, 0, 0), [3, 3])  # not primitive
    pi = primary_primes_of_norm(3)[0]
    with pytest.raises(ValueError):
        factor_primitive(pi.element, [5])  # wrong prime order


# -- full factorization ------------------------------------------------------

def test_full_factor_of_1_plus_i():
    f = full_factor(ONE_PLUS_I)
    assert (f.r, f.unit, f.sign, f.content, f.primes) == (1, ONE, 1, 1, ())


def test_full_factor_of_3():
    # 3 = -1 mod 2(1+i), so its primary left associate is -3 = (-1)*3 and
    # the content splits off with a compensating sign
    f = full_factor(OrderElement(3, 0, 0, 0))
    assert f.r == 0
    assert f.unit == -ONE
    assert f.sign == -1
    assert f.content == 3
    assert f.primes == ()
    assert f.reassemble() == OrderElement(3, 0, 0, 0)


def test_full_factor_recovers_built_product():
    rng = random.Random(52)
    fives = primary_primes_of_norm(5)
    for _ in range(24):
        u = rng.choice(units())
        pi = rng.choice(fives)
        x = ONE_PLUS_I ** 2 * u * pi.element
        f = full_factor(x)
        assert f.r == 2
        assert f.unit == u
        assert f.sign == 1 and f.content == 1
        assert f.primes == (pi,)
        assert f.reassemble() == x


def test_full_factor_random_reassembly():
    rng = random.Random(53)
    done = 0
    while done < 120:
        x = OrderElement(*(rng.randint(-40, 40) for _ in range(4)))
        if x.is_zero or x.norm() > 10**4:
            continue
        f = full_factor(x)
        assert f.reassemble() == x
        norm_product = 2**f.r * f.content**2
        for pi in f.primes:
            assert is_primary(pi.element)
            norm_product *= pi.p
        assert norm_product == x.norm()
        done += 1


def test_adjacent_p_conjugates_never_appear():
    # factoring a primitive element never puts pi next to its p-conjugate
    rng = random.Random(54)
    done = 0
    while done < 60:
        x = OrderElement(*(rng.randint(-20, 20) for _ in range(4)))
        if x.is_zero or x.norm() > 4000 or not is_primitive(x):
            continue
        primes = full_factor(x).primes
        for a, b in zip(primes, primes[1:]):
            if a.p == b.p:
                assert p_conjugate(a) != b
        done += 1


def test_rational_primes_are_not_prime_here():
    # p is never a unit times a single prime of the order
    for p in (2, 3, 5, 7):
        f = full_factor(OrderElement(p, 0, 0, 0))
        atoms = f.r + len(f.primes) + (0 if f.content == 1 else 2)
        assert atoms >= 2
        assert not (f.content == 1 and f.r + len(f.primes) == 1)


def test_full_factor_rejects_zero():
    with pytest.raises(ValueError):
        full_factor(ZERO)


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(r=-1, unit=ONE, sign=1, content=1, primes=())
    with pytest.raises(ValueError):
        Factorization(r=0, unit=ONE, sign=2, content=1, primes=())
    with pytest.raises(ValueError):
        Factorization(r=0, unit=ONE, sign=1, content=2, primes=())
    with pytest.raises(ValueError):
        Factorization(r=0, unit=V3 + I, sign=1, content=1, primes=())


def test_factorization_json():
    f = full_factor(OrderElement(3, 1, 1, 0))
    blob = f.to_json()
    assert blob["r"] == f.r and blob["content"] == f.content
    assert blob["unit"] == f.unit.to_json()
    assert [p["v"] for p in blob["primes"]] == [list(p.element.coords) for p in f.primes]
