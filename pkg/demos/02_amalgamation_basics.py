"""The central construction: amalgamating a hom along an ideal.

Given f: A -> B and an ideal J of B, the amalgam is the subring
{(a, f(a) + j) : a in A, j in J} of A x B. Duplication is the special case
f = id. This script builds both, shows the order law, and runs the
reducedness and domain criteria with their verification reports.
"""

from __future__ import annotations

from finring import amalgam, duplication, zmod
from finring.amalgamation import (
    domain_criterion_check,
    reduced_criterion_check,
    same_amalgam,
)
from finring.morphisms import enumerate_homs, identity_hom
from finring.subobjects import ideal_from_generators, unit_ideal

line = "-" * 64

print(line)
print("duplication of Z4 along (2)")
print(line)
z4 = zmod(4)
two = ideal_from_generators(z4, [2])
am = duplication(z4, two)
print(f"instance: {am.description}")
print(f"order {am.ring.order} = {z4.order} * {two.size}")
print(f"first few pairs: {[tuple(p) for p in am.pairs[:4].tolist()]}")
rep = reduced_criterion_check(am)
print(rep.line())
print(f"  amalgam_reduced = {rep.witness('amalgam_reduced')}"
      f"  ((0,2) squares to zero)")

print()
print(line)
print("duplication of Z6 along (2): reduced")
print(line)
z6 = zmod(6)
am6 = duplication(z6, ideal_from_generators(z6, [2]))
rep6 = reduced_criterion_check(am6)
print(f"order {am6.ring.order}")
print(rep6.line())
print(f"  amalgam_reduced = {rep6.witness('amalgam_reduced')}")

print()
print(line)
print("a genuine hom: Z4 -> Z2 along the unit ideal")
print(line)
f = enumerate_homs(zmod(4), zmod(2))[0]
amf = amalgam(f, unit_ideal(zmod(2)))
print(f"instance: {amf.description}, order {amf.ring.order}")

print()
print(line)
print("the domain criterion and its finite degeneracy")
print(line)
am3 = duplication(z6, ideal_from_generators(z6, [3]))
dom = domain_criterion_check(am3)
print(dom.line())
print(f"  equivalence_holds = {dom.witness('equivalence_holds')}")
print(f"  {dom.witness('finite_degeneracy')}")

print()
print(line)
print("when do two homs give the same amalgam?")
print(line)
idm = identity_hom(z4)
rep_same = same_amalgam(idm, idm, two)
print(rep_same.line())
print(f"  element_sets_equal = {rep_same.witness('element_sets_equal')}")
