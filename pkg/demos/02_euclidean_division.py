#!/usr/bin/env python3
"""Division with remainder and one-sided GCDs with Bezout certificates."""

import random

from quat1122 import OrderElement, div_rem, gcd
from quat1122.core import ONE_PLUS_I

a = OrderElement(7, -3, 2, 5)
b = OrderElement(2, 1, -1, 0)

print(f"a = {a} (norm {a.norm()}),  b = {b} (norm {b.norm()})")
for side in ("right", "left"):
    res = div_rem(a, b, side)
    print(f"  {side:>5}: q = {res.quotient}, r = {res.remainder} "
          f"(norm {res.remainder.norm()} < {b.norm()})")
print()

# Right gcd: divides both on the right, and is a left-linear combination.
res = gcd(a, b, "right")
d, (x, y) = res.gcd, res.cofactors
print(f"right gcd(a, b) = {d}")
print(f"Bezout: ({x})*a + ({y})*b = {x * a + y * b}")
print()

# gcd(2, 1+i) has norm 2: the dyadic prime divides 2 on both sides.
two = OrderElement(2, 0, 0, 0)
print(f"gcd(2, 1+i, right) = {gcd(two, ONE_PLUS_I, 'right').gcd} "
      f"(an associate of 1+i)")
print()

# Random exactness check: a quotient built as q*b divides back cleanly.
rng = random.Random(0)
clean = 0
for _ in range(1000):
    q = OrderElement(*(rng.randint(-9, 9) for _ in range(4)))
    v = OrderElement(*(rng.randint(-9, 9) for _ in range(4)))
    if v.is_zero:
        continue
    res = div_rem(q * v, v, "right")
    clean += res.remainder.is_zero and res.quotient == q
print(f"exact products recovered: {clean}/1000")
