"""Amalgams as fiber products, and when a pullback is an amalgam.

The amalgam of f along J is literally the pullback of the induced map
A -> B/J against the projection B -> B/J: same element set, same tables.
Conversely, a pullback of alpha and beta is an amalgam of its left ring
exactly when the left projection splits; both directions of that criterion
are certified by exhaustive search on failure.
"""

from __future__ import annotations

from finring import duplication, pullback, zmod
from finring.amalgamation import (
    factor_check,
    pull_identity_check,
    retraction_criterion_check,
    retraction_roundtrip,
)
from finring.morphisms import enumerate_homs, identity_hom
from finring.rings import direct_product
from finring.subobjects import ideal_from_generators

line = "-" * 64

print(line)
print("the amalgam IS a fiber product")
print(line)
z12 = zmod(12)
am = duplication(z12, ideal_from_generators(z12, [3]))
rep = pull_identity_check(am)
print(rep.line())
for name in ("element_sets_equal", "tables_equal", "order"):
    print(f"  {name} = {rep.witness(name)}")

print()
print(line)
print("re-entering an amalgam as a pullback recovers everything")
print(line)
rt = retraction_roundtrip(am)
print(rt.line())
for name in ("section_found", "recovered_ideal_equals_J"):
    print(f"  {name} = {rt.witness(name)}")

print()
print(line)
print("a pullback that is NOT an amalgam of its left ring")
print(line)
r2 = zmod(2)
beta = enumerate_homs(zmod(4), r2)[0]
neg = retraction_criterion_check(identity_hom(r2), beta)
print(neg.line())
for name in ("section_found", "presentations_exhausted",
             "no_presentation_exists"):
    print(f"  {name} = {neg.witness(name)}")
print("  (Z2 cannot map unitally into the pullback, which is a copy of Z4)")

print()
print(line)
print("factoring criterion: alpha = beta o f")
print(line)
p22 = direct_product([zmod(2), zmod(2)])
proj1, proj2 = enumerate_homs(p22, r2)
good = factor_check(proj1, identity_hom(r2), proj1)
bad = factor_check(proj1, identity_hom(r2), proj2)
print(good.line())
print(f"  factors = {good.witness('alpha_factors_through_beta')}")
print(bad.line())
print(f"  factors = {bad.witness('alpha_factors_through_beta')}, "
      f"no ideal matches = {bad.witness('no_ideal_matches')}")

print()
print(line)
print("raw pullback construction")
print(line)
pb = pullback(proj1, proj2)
print(f"pairs where both projections agree: {pb.ring.order} elements")
