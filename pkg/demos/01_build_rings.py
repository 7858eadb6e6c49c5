"""Tour of the base ring constructors and their element arithmetic.

Every ring is a pair of dense operation tables over indices 0..n-1 with all
axioms checked at construction time, so anything that builds is already a
commutative rng and anything unital knows its identity.
"""

from __future__ import annotations

from finring import direct_product, galois_field, trunc_poly, zmod
from finring.rings import characteristic, is_domain, is_field, is_reduced

line = "-" * 64

print(line)
print("modular integers")
print(line)
z12 = zmod(12)
print(f"{z12.name}: order {z12.order}, characteristic {characteristic(z12)}")
five, seven = z12.by_label("5"), z12.by_label("7")
print(f"5 + 7 = {(five + seven).label},  5 * 7 = {(five * seven).label}")
print(f"reduced: {is_reduced(z12)}  (6 squares to 0)")

print()
print(line)
print("products and truncated polynomials")
print(line)
p = direct_product([zmod(2), zmod(3)])
print(f"{p.name}: order {p.order}, labels like {p.labels[4]!r}")
t = trunc_poly(zmod(2), 1, 2)
x = t.by_label("X")
print(f"{t.name}: order {t.order}; X^2 = {(x * x).label}, X^3 = {(x ** 3).label}")
v = trunc_poly(zmod(2), 2, 1)
print(f"two variables, degree 1: order {v.order}, labels {v.labels[:4]} ...")

print()
print(line)
print("the field with four elements")
print(line)
f4 = galois_field(4)
w = f4.by_label("w")
print(f"{f4.name}: labels {f4.labels}")
print(f"w * w = {(w * w).label}  (the defining relation)")
print(f"field: {is_field(f4)}, domain: {is_domain(f4)}")

print()
print(line)
print("structural comparison ignores names")
print(line)
a, b = zmod(4), zmod(4)
print(f"two builds of the same tables compare equal: {a == b}")
print(f"Z4 vs Z2 x Z2 equal: {a == direct_product([zmod(2), zmod(2)])}")
