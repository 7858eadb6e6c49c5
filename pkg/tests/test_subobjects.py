"""Ideals, quotients, localization, and modules against naive oracles."""

from __future__ import annotations

import numpy as np
import pytest

from finring.errors import NotMultiplicativelyClosed
from finring.morphisms import first_iso_witness, identity_hom, verify_iso
from finring.rings import direct_product, trunc_poly, zmod
from finring.subobjects import (
    all_ideals,
    ideal_from_generators,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_idempotent_ideal,
    is_maximal,
    is_prime,
    is_radical,
    localization,
    module_min_generators,
    module_via_hom,
    nilradical,
    quotient_ring,
    regular_elements_mod,
    submodule_generated,
    subring_generated,
    unit_ideal,
    zero_ideal,
)

from oracles import (
    coset_partition,
    fraction_class_count,
    ideal_closure,
    min_generator_size,
    nilpotent_set,
    regular_mod,
)


def test_ideal_closure_matches_naive_worklist():
    r = direct_product([zmod(2), zmod(4)])
    for gens in ([], [1], [2], [5], [1, 4]):
        want = ideal_closure(r.add.tolist(), r.mul.tolist(), r.zero, gens)
        got = ideal_from_generators(r, gens)
        assert frozenset(got.indices.tolist()) == want


def test_ideal_lattice_of_z12():
    r = zmod(12)
    ideals = all_ideals(r)
    assert sorted(i.size for i in ideals) == [1, 2, 3, 4, 6, 12]
    # divisors of 12 name the ideals: (d) has 12/d elements
    for d in (1, 2, 3, 4, 6, 12):
        gen = ideal_from_generators(r, [d % 12])
        assert gen.size == 12 // d


def test_ideal_arithmetic_on_z12():
    r = zmod(12)
    two, three = ideal_from_generators(r, [2]), ideal_from_generators(r, [3])
    assert ideal_sum(two, three).size == 12          # gcd 1
    assert ideal_intersection(two, three).size == 2  # lcm 6
    assert ideal_product(two, three).size == 2       # (6)
    assert not is_idempotent_ideal(two)
    assert is_idempotent_ideal(ideal_from_generators(r, [4]))  # (4)^2 = (4)


def test_nilradical_of_z12():
    r = zmod(12)
    assert frozenset(nilradical(r).indices.tolist()) == nilpotent_set(
        r.mul.tolist(), 0
    )
    assert nilradical(r).size == 2  # {0, 6}


def test_prime_maximal_radical_on_z12():
    r = zmod(12)
    p2, p3 = ideal_from_generators(r, [2]), ideal_from_generators(r, [3])
    p4 = ideal_from_generators(r, [4])
    assert is_prime(p2) and is_prime(p3)
    assert is_maximal(p2) and is_maximal(p3)
    assert not is_prime(p4)
    assert is_radical(ideal_from_generators(r, [6]))
    assert not is_radical(p4)


def test_quotient_cosets_match_naive_partition():
    r = zmod(12)
    ideal = ideal_from_generators(r, [4])
    quotient, proj = quotient_ring(r, ideal)
    assert quotient.order == 4
    naive = coset_partition(r.add.tolist(), ideal.members.tolist(), 12)
    got = {frozenset(np.flatnonzero(proj.map == q).tolist())
           for q in range(quotient.order)}
    assert got == naive
    # the quotient of Z12 by (4) has characteristic 4 and order 4
    assert quotient.add[proj.map[1], proj.map[3]] == proj.map[0]


def test_localization_at_odds_of_z12():
    r = zmod(12)
    odds = np.array([1, 3, 5, 7, 9, 11])
    loc, lam = localization(r, odds)
    assert loc.order == fraction_class_count(r, odds.tolist()) == 4
    assert lam.domain is r and lam.codomain is loc
    # 4 is annihilated by the odd 3, so it dies; 3 has no odd annihilator
    assert lam.map[4] == loc.zero and lam.map[3] != loc.zero


def test_localization_rejects_set_without_closure():
    r = zmod(12)
    with pytest.raises(NotMultiplicativelyClosed):
        localization(r, np.array([2, 3]))


def test_regular_elements_mod_matches_naive():
    r = zmod(12)
    ideal = ideal_from_generators(r, [4])
    got = regular_elements_mod(r, ideal)
    want = regular_mod(r.add.tolist(), r.mul.tolist(),
                       ideal.members.tolist(), 12)
    assert got.tolist() == want
    assert got.size == 6  # the odd residues


def test_all_ideals_of_product_ring():
    r = direct_product([zmod(2), zmod(2)])
    ideals = all_ideals(r)
    assert len(ideals) == 4  # 0, Z2 x 0, 0 x Z2, everything
    assert sorted(i.size for i in ideals) == [1, 2, 2, 4]


def test_subring_generated_contains_one_and_closes():
    r = trunc_poly(zmod(4), 1, 1)
    prime = subring_generated(r, [])
    assert prime.size == 4  # multiples of 1
    full = subring_generated(r, [r.index_of("X")])
    assert full.size == 16


def test_submodule_closure_needs_multiple_passes():
    # generator 1 reaches all of Z8 only after repeated additive steps;
    # this must terminate and cover everything
    r = zmod(8)
    m = module_via_hom(identity_hom(r), unit_ideal(r))
    mask = submodule_generated(m, [1])
    assert mask.all()
    sub = submodule_generated(m, [2])
    assert sorted(np.flatnonzero(sub).tolist()) == [0, 2, 4, 6]


def test_module_min_generators_matches_brute_force():
    r = zmod(12)
    ideal = ideal_from_generators(r, [2])
    m = module_via_hom(identity_hom(r), ideal)
    search = module_min_generators(m)
    want = min_generator_size(m.add.tolist(), m.action.tolist(), m.zero)
    assert len(search.indices) == want == 1
    assert search.minimal


def test_first_isomorphism_witness_for_z12_mod_4():
    r = zmod(12)
    _, proj = quotient_ring(r, ideal_from_generators(r, [4]))
    fi = first_iso_witness(proj)
    assert fi.valid
    assert fi.quotient.order == 4
    assert verify_iso(fi.iso)


def test_zero_and_unit_ideals():
    r = zmod(6)
    assert zero_ideal(r).size == 1 and zero_ideal(r).is_zero
    assert unit_ideal(r).size == 6
    assert not is_prime(unit_ideal(r))
