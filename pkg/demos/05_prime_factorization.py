#!/usr/bin/env python3
"""Primary primes and the unique decomposition of any nonzero element."""

from quat1122 import (
    OrderElement,
    factor_primitive,
    full_factor,
    p_conjugate,
    primary_primes_of_norm,
)

# p+1 primary primes of each odd prime norm.
for p in (3, 5, 7):
    primes = primary_primes_of_norm(p)
    print(f"norm {p}: {len(primes)} primary primes:",
          [str(pi.element) for pi in primes])
print()

# The p-conjugate pairs multiply to +p or -p according to p mod 4.
for p in (5, 3):
    pi = primary_primes_of_norm(p)[0]
    pc = p_conjugate(pi)
    print(f"p = {p} = {p % 4} mod 4:  {pi.element} * {pc.element} "
          f"= {pi.element * pc.element}")
print()

# A primitive element factors along any ordering of its norm's primes.
pi3 = primary_primes_of_norm(3)[0]
pi5 = primary_primes_of_norm(5)[0]
c = pi3.element * pi5.element
print(f"c = {pi3.element} * {pi5.element} = {c}  (norm {c.norm()})")
print("  factored (3,5):", [str(x.element) for x in factor_primitive(c, [3, 5])])
print("  factored (5,3):", [str(x.element) for x in factor_primitive(c, [5, 3])])
print()

# Full normal form of arbitrary elements.
for x in (OrderElement(2, 0, 0, 0), OrderElement(3, 0, 0, 0), OrderElement(6, 3, 1, -2)):
    f = full_factor(x)
    print(f"{x}  (norm {x.norm()})")
    print(f"  = (1+i)^{f.r} * {f.unit} * ({f.sign:+d}*{f.content}) * "
          f"{[str(pi.element) for pi in f.primes]}")
    assert f.reassemble() == x
