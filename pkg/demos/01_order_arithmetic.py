#!/usr/bin/env python3
"""Tour of exact arithmetic in the order: coordinates, products, units."""

from quat1122 import OrderElement, format_half, parse, units
from quat1122.core import I, ONE, ONE_PLUS_I, SQRT2_J, V3, V4

print("Basis: v1 = 1, v2 = i, v3 = (1+i+sqrt2 j)/2, v4 = (1+i+sqrt2 k)/2")
print()

# Elements are integer 4-tuples in that basis.
e = OrderElement(1, 1, 1, 1)
print(f"e = v1+v2+v3+v4 = {e}, i.e. {format_half(e)}")
print(f"   half coords {tuple(e.half_coords)}, norm {e.norm()}")
print()

# The basis element v3 squares to v3 - 1 (it generates a hexagonal ring).
print(f"v3 * v3 = {V3 * V3}  (= v3 - 1)")
print(f"v3 * v4 = {V3 * V4}  (= i; multiplication is noncommutative:", f"v4 * v3 = {V4 * V3})")
print()

# Conjugation negates the imaginary standard coefficients; the norm is the
# quadratic form (A^2 + B^2 + 2C^2 + 2D^2)/4 in half coordinates.
for x in (V3, ONE_PLUS_I, SQRT2_J):
    print(f"conj({format_half(x)}) = {format_half(x.conjugate())},  norm = {x.norm()}")
print()

a = parse("[3,-1,2,0]")
b = parse("(4+2i+0r2j+2r2k)/2")
print(f"a = {a}, b = {b}")
print(f"a*b = {a * b},   norm(a)*norm(b) = {a.norm()}*{b.norm()} = {(a * b).norm()}")
print()

# Exactly 24 units; the four with integer standard coordinates are +/-1, +/-i.
table = units()
print(f"{len(table)} units; integral ones:",
      [str(u) for u in table if u.is_integral])
print("sample of the rest:", [format_half(u) for u in table[:4]])
