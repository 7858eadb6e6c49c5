"""Homs, enumeration, sections, and isomorphism search against brute force."""

from __future__ import annotations

import numpy as np
import pytest

from finring.errors import AmbientMismatch, MalformedMap
from finring.morphisms import (
    RingHom,
    compose,
    corestrict,
    enumerate_homs,
    find_iso,
    find_section,
    identity_hom,
    image,
    kernel,
    verify_iso,
)
from finring.rings import direct_product, galois_field, trunc_poly, zmod
from finring.subobjects import ideal_from_generators, quotient_ring

from oracles import all_homs_brute


def test_hom_validation_rejects_non_multiplicative_map():
    a, b = zmod(4), zmod(4)
    with pytest.raises(MalformedMap):
        RingHom(a, b, np.array([0, 3, 2, 1]))  # additive, not multiplicative


def test_hom_validation_rejects_non_unital_map():
    a = zmod(2)
    with pytest.raises(MalformedMap):
        RingHom(a, a, np.array([0, 0]))


def test_enumerate_homs_matches_brute_force_on_small_rings():
    cases = [
        (zmod(4), zmod(2)),
        (zmod(2), zmod(4)),
        (zmod(2), zmod(2)),
        (direct_product([zmod(2), zmod(2)]), zmod(2)),
        (trunc_poly(zmod(2), 1, 1), trunc_poly(zmod(2), 1, 1)),
    ]
    for a, b in cases:
        want = sorted(all_homs_brute(a, b))
        got = sorted(tuple(int(x) for x in h.map)
                     for h in enumerate_homs(a, b))
        assert got == want


def test_expected_hom_counts():
    assert len(enumerate_homs(zmod(4), zmod(2))) == 1
    assert len(enumerate_homs(zmod(2), zmod(4))) == 0
    assert len(enumerate_homs(zmod(6), zmod(6))) == 1
    p22 = direct_product([zmod(2), zmod(2)])
    assert len(enumerate_homs(p22, p22)) == 4


def test_kernel_and_image_of_reduction():
    h = enumerate_homs(zmod(12), zmod(4))[0]
    k = kernel(h)
    assert sorted(k.indices.tolist()) == [0, 4, 8]
    assert image(h).size == 4
    assert h.is_surjective and not h.is_injective


def test_compose_and_corestrict():
    r12, r4, r2 = zmod(12), zmod(4), zmod(2)
    f = enumerate_homs(r12, r4)[0]
    g = enumerate_homs(r4, r2)[0]
    gf = compose(g, f)
    assert np.array_equal(gf.map, g.map[f.map])
    co, embed = corestrict(f)
    assert co.is_surjective and co.codomain.order == 4
    assert np.array_equal(embed.map[co.map], f.map)


def test_compose_rejects_mismatched_rings():
    f = identity_hom(zmod(4))
    g = identity_hom(zmod(2))
    with pytest.raises(AmbientMismatch):
        compose(g, f)


def test_verify_iso_accepts_only_bijective_homs():
    r = zmod(4)
    assert verify_iso(identity_hom(r))
    h = enumerate_homs(zmod(12), r)[0]
    assert not verify_iso(h)


def test_find_iso_between_isomorphic_presentations():
    r = zmod(12)
    q, _ = quotient_ring(r, ideal_from_generators(r, [4]))
    search = find_iso(q, zmod(4))
    assert search.found
    assert verify_iso(search.hom)


def test_find_iso_distinguishes_non_isomorphic_rings():
    a = direct_product([zmod(2), zmod(2)])
    certain = find_iso(a, zmod(4))
    assert not certain.found and certain.exhausted
    b = trunc_poly(zmod(2), 1, 1)
    ruled_out = find_iso(b, galois_field(4))
    assert not ruled_out.found and ruled_out.exhausted


def test_find_section_of_product_projection():
    # the first projection of Z2 x Z2 splits through the diagonal, while
    # Z4 -> Z2 admits no unital section at all
    p22, r2 = direct_product([zmod(2), zmod(2)]), zmod(2)
    p = enumerate_homs(p22, r2)[0]
    hit = find_section(p)
    assert hit.found
    assert np.array_equal(p.map[hit.section.map], np.arange(2))

    q = enumerate_homs(zmod(4), r2)[0]
    miss = find_section(q)
    assert not miss.found and miss.exhausted


def test_no_unital_section_for_z6_onto_z3():
    # s(1) = 1 would force 3*1 = 0 in Z6, so the splitting of abelian
    # groups does not lift to unital rings; the search certifies this
    p = enumerate_homs(zmod(6), zmod(3))[0]
    res = find_section(p)
    assert not res.found and res.exhausted
