"""Named constructions against naive set and table oracles."""

from __future__ import annotations

import numpy as np
import pytest

from finring.constructions import (
    cpi_ideal,
    cpi_prime,
    d_plus_m,
    nagata_as_amalgam_check,
    nagata_idealization,
    noetherian_report,
    noetherian_verdict_xjx,
    trunc_poly_amalgam,
)
from finring.amalgamation import duplication
from finring.errors import HypothesisViolated, InvalidParameter, NotPrime
from finring.morphisms import find_iso, identity_hom, verify_iso
from finring.reports import PASS, THEOREM_BACKED
from finring.rings import galois_field, trunc_poly, zmod
from finring.subobjects import (
    ideal_from_generators,
    module_via_hom,
    nilradical,
    subring_generated,
    unit_ideal,
    zero_ideal,
)

from oracles import fraction_class_count, min_generator_size, regular_mod


def test_nagata_tables_match_naive_product_rule():
    r = zmod(4)
    m = module_via_hom(identity_hom(r), ideal_from_generators(r, [2]))
    idl = nagata_idealization(r, m)
    assert idl.ring.order == 8
    # (a, x)(a', x') = (aa', a.x' + a'.x) with the square of the module zero
    emb_a, emb_m = idl.embed_base.map, idl.embed_module.map
    for a in range(4):
        for x in range(m.order):
            for a2 in range(4):
                for x2 in range(m.order):
                    left = idl.ring.add[emb_a[a], emb_m[x]]
                    right = idl.ring.add[emb_a[a2], emb_m[x2]]
                    prod = idl.ring.mul[left, right]
                    want = idl.ring.add[
                        emb_a[r.mul[a, a2]],
                        idl.ring.add[emb_m[m.action[a, x2]],
                                     emb_m[m.action[a2, x]]],
                    ]
                    assert prod == want


def test_nagata_by_full_module_of_z2_is_dual_numbers():
    r = zmod(2)
    m = module_via_hom(identity_hom(r), unit_ideal(r))
    idl = nagata_idealization(r, m)
    search = find_iso(idl.ring, trunc_poly(zmod(2), 1, 1))
    assert search.found and verify_iso(search.hom)


def test_nagata_nilradical_contains_module():
    r = zmod(3)
    m = module_via_hom(identity_hom(r), unit_ideal(r))
    idl = nagata_idealization(r, m)
    nil = nilradical(idl.ring)
    assert bool(nil.members[idl.embed_module.map].all())
    assert nil.size == 3


def test_nagata_as_amalgam():
    r = zmod(4)
    m = module_via_hom(identity_hom(r), ideal_from_generators(r, [2]))
    rep = nagata_as_amalgam_check(r, m)
    assert rep.status == PASS
    assert rep.witness("collapse_map_is_iso") == "True"
    assert rep.witness("module_ideal_square_zero") == "True"


def test_d_plus_m_inside_truncated_polynomials_over_gf4():
    t = trunc_poly(galois_field(4), 1, 1)
    d = subring_generated(t, [])  # prime subring, a copy of Z2
    assert d.size == 2
    m = ideal_from_generators(t, [t.index_of("X")])
    assert m.size == 4
    result, rep = d_plus_m(t, d, [m])
    assert rep.status == PASS
    assert result.size == 8
    assert rep.witness("order_law_holds") == "True"

    # naive membership: sums d + j, one from each
    want = {int(t.add[i, j]) for i in d.indices for j in m.indices}
    assert set(result.indices.tolist()) == want


def test_d_plus_m_rejects_subring_meeting_the_ideal():
    t = trunc_poly(galois_field(4), 1, 1)
    d = subring_generated(t, [t.index_of("X")])
    m = ideal_from_generators(t, [t.index_of("X")])
    with pytest.raises(HypothesisViolated):
        d_plus_m(t, d, [m])


def test_d_plus_m_rejects_non_maximal_ideal():
    t = zmod(12)
    d = subring_generated(t, [])
    four = ideal_from_generators(t, [4])
    with pytest.raises(HypothesisViolated):
        d_plus_m(t, d, [four])


def test_cpi_prime_at_two_in_z12():
    r = zmod(12)
    p = ideal_from_generators(r, [2])
    ring, rep = cpi_prime(r, p)
    assert rep.status == PASS
    assert rep.witness("localization_order") == "4"
    assert rep.witness("amalgam_order") == "24"
    assert rep.witness("kernel_order") == "6"
    assert rep.witness("quotient_order") == "4"
    assert rep.witness("contraction_is_P") == "True"
    assert ring.order == 4

    # naive: the localization at the odd residues has four fraction classes
    odds = [i for i in range(12) if i % 2 == 1]
    assert fraction_class_count(r, odds) == 4


def test_cpi_prime_rejects_non_prime():
    r = zmod(12)
    with pytest.raises(NotPrime):
        cpi_prime(r, ideal_from_generators(r, [4]))


def test_cpi_prime_at_zero_in_field_recovers_field():
    f4 = galois_field(4)
    ring, rep = cpi_prime(f4, zero_ideal(f4))
    assert rep.status == PASS
    assert ring.order == 4


def test_cpi_ideal_at_four_in_z12():
    r = zmod(12)
    ideal = ideal_from_generators(r, [4])
    ring, rep = cpi_ideal(r, ideal)
    assert rep.status == PASS
    assert rep.witness("regular_set_order") == "6"
    assert rep.witness("contraction_is_I") == "True"
    want = regular_mod(r.add.tolist(), r.mul.tolist(),
                       ideal.members.tolist(), 12)
    assert len(want) == 6


def test_cpi_ideal_agrees_with_cpi_prime_on_primes():
    r = zmod(12)
    p = ideal_from_generators(r, [2])
    ring_i, rep_i = cpi_ideal(r, p)
    ring_p, rep_p = cpi_prime(r, p)
    assert rep_i.status == rep_p.status == PASS
    assert ring_i.order == ring_p.order


def test_cpi_ideal_rejects_unit_ideal():
    r = zmod(12)
    with pytest.raises(InvalidParameter):
        cpi_ideal(r, unit_ideal(r))


def test_trunc_poly_amalgam_prime_subfield_of_gf4():
    f4 = galois_field(4)
    sub = subring_generated(f4, [])
    ring, rep = trunc_poly_amalgam(sub, f4, unit_ideal(f4), 1, 1)
    assert rep.status == PASS
    assert ring.order == 8
    assert rep.witness("order_law_holds") == "True"

    # naive: constant coefficient from the subring, X coefficient anywhere
    assert int(rep.witness("amalgam_order")) == sub.size * 4


def test_trunc_poly_amalgam_with_zero_ideal_is_base():
    f4 = galois_field(4)
    sub = subring_generated(f4, [])
    ring, rep = trunc_poly_amalgam(sub, f4, zero_ideal(f4), 1, 1)
    assert rep.status == PASS
    assert ring.order == 2


def test_noetherian_report_generators_of_duplication():
    r = zmod(4)
    am = duplication(r, ideal_from_generators(r, [2]))
    rep = noetherian_report(am)
    assert rep.status == PASS
    assert rep.witness("ideal_module_generators") == "{2}"
    assert rep.witness("generators_verified") == "True"

    m = module_via_hom(am.hom, am.ideal)
    assert min_generator_size(m.add.tolist(), m.action.tolist(), m.zero) == 1


def test_noetherian_xjx_idempotent_and_not():
    from finring.rings import direct_product

    p22 = direct_product([zmod(2), zmod(2)])
    sub = subring_generated(p22, [])
    j = ideal_from_generators(p22, [p22.index_of("(1,0)")])
    rep = noetherian_verdict_xjx(sub, p22, j)
    assert rep.status == THEOREM_BACKED
    assert rep.witness("ideal_idempotent") == "True"
    assert rep.witness("constrained_variable_ring_noetherian") == "yes"

    r4 = zmod(4)
    rep2 = noetherian_verdict_xjx(
        subring_generated(r4, []), r4, ideal_from_generators(r4, [2])
    )
    assert rep2.status == THEOREM_BACKED
    assert rep2.witness("ideal_square_order") == "1"
    assert rep2.witness("ideal_idempotent") == "False"
    assert rep2.witness("constrained_variable_ring_noetherian").startswith("no")
    assert rep2.witness("full_variable_ring_noetherian").startswith("yes")
