"""Amalgam constructions and their verification ops against naive sets."""

from __future__ import annotations

import numpy as np
import pytest

from finring.amalgamation import (
    alt_pullback_checks,
    amalgam,
    canonical_isos,
    domain_criterion_check,
    dorroh,
    dorroh_check,
    dotted_sum,
    duplication,
    factor_check,
    image_plus_ideal,
    image_plus_ideal_check,
    iter_iso_check,
    kernel_identity_check,
    n_amalgam,
    pull_identity_check,
    pullback,
    pullback_reduced_check,
    reduced_converse_search,
    reduced_criterion_check,
    retraction_criterion_check,
    retraction_roundtrip,
    same_amalgam,
    split_sequence_check,
)
from finring.errors import FinringError, HypothesisViolated, InvalidParameter
from finring.morphisms import enumerate_homs, identity_hom, verify_iso
from finring.reports import FAIL, HYPOTHESIS_NOT_MET, PASS
from finring.rings import direct_product, is_reduced, zmod
from finring.subobjects import (
    ideal_as_rng,
    ideal_from_generators,
    unit_ideal,
    zero_ideal,
)

from oracles import amalgam_pairs, is_domain, nilpotent_set, pullback_pairs


def _pairs_set(am):
    return frozenset(map(tuple, am.pairs.tolist()))


def test_duplication_element_set_matches_naive():
    r = zmod(4)
    ideal = ideal_from_generators(r, [2])
    am = duplication(r, ideal)
    want = amalgam_pairs(list(range(4)), r.add.tolist(), ideal.indices.tolist())
    assert _pairs_set(am) == want
    assert am.ring.order == 8


def test_amalgam_along_reduction_matches_naive():
    f = enumerate_homs(zmod(4), zmod(2))[0]
    j = unit_ideal(zmod(2))
    am = amalgam(f, j)
    want = amalgam_pairs(f.map.tolist(), zmod(2).add.tolist(),
                         j.indices.tolist())
    assert _pairs_set(am) == want
    assert am.ring.order == 8


def test_amalgam_tables_are_componentwise():
    r = zmod(6)
    am = duplication(r, ideal_from_generators(r, [2]))
    pairs = am.pairs
    pos = {tuple(p): i for i, p in enumerate(pairs.tolist())}
    for i, (a, b) in enumerate(pairs.tolist()):
        for k, (c, d) in enumerate(pairs.tolist()):
            assert am.ring.add[i, k] == pos[(r.add[a, c], r.add[b, d])]
            assert am.ring.mul[i, k] == pos[(r.mul[a, c], r.mul[b, d])]


def test_amalgam_requires_matching_ambient():
    f = identity_hom(zmod(4))
    wrong = ideal_from_generators(zmod(6), [2])
    with pytest.raises(FinringError):
        amalgam(f, wrong)


def test_duplication_by_zero_ideal_is_graph():
    r = zmod(6)
    am = duplication(r, zero_ideal(r))
    assert am.ring.order == 6
    assert _pairs_set(am) == frozenset((a, a) for a in range(6))


def test_reduced_criterion_on_known_instances():
    r4 = zmod(4)
    am4 = duplication(r4, ideal_from_generators(r4, [2]))
    rep4 = reduced_criterion_check(am4)
    assert rep4.status == PASS
    assert rep4.witness("amalgam_reduced") == "False"
    naive = nilpotent_set(am4.ring.mul.tolist(), am4.ring.zero)
    assert len(naive) > 1  # the pair (0, 2) squares to zero

    r6 = zmod(6)
    am6 = duplication(r6, ideal_from_generators(r6, [2]))
    rep6 = reduced_criterion_check(am6)
    assert rep6.status == PASS
    assert rep6.witness("amalgam_reduced") == "True"
    assert am6.ring.order == 18
    assert is_reduced(am6.ring)


def test_reduced_criterion_agrees_with_naive_on_sample():
    rings = [zmod(4), zmod(6), zmod(8), zmod(9),
             direct_product([zmod(2), zmod(2)])]
    for r in rings:
        for gen in range(r.order):
            ideal = ideal_from_generators(r, [gen])
            am = duplication(r, ideal)
            rep = reduced_criterion_check(am)
            assert rep.status == PASS
            naive_reduced = nilpotent_set(
                am.ring.mul.tolist(), am.ring.zero
            ) == frozenset({am.ring.zero})
            assert rep.witness("amalgam_reduced") == str(naive_reduced)


def test_domain_criterion_needs_nonzero_ideal():
    r = zmod(4)
    rep = domain_criterion_check(duplication(r, zero_ideal(r)))
    assert rep.status == HYPOTHESIS_NOT_MET


def test_domain_criterion_equivalence_with_naive_sides():
    r = zmod(6)
    ideal = ideal_from_generators(r, [3])
    am = duplication(r, ideal)
    rep = domain_criterion_check(am)
    assert rep.status == PASS
    assert rep.witness("equivalence_holds") == "True"
    lhs = is_domain(am.ring.mul.tolist(), am.ring.zero, am.ring.one)
    assert rep.witness("amalgam_is_domain") == str(lhs)


def test_pull_identity_matches_naive_pullback():
    r = zmod(12)
    ideal = ideal_from_generators(r, [3])
    am = duplication(r, ideal)
    rep = pull_identity_check(am)
    assert rep.status == PASS

    # naive: reduce both maps mod the ideal and collect agreeing pairs
    from finring.subobjects import quotient_ring

    quotient, proj = quotient_ring(r, ideal)
    want = pullback_pairs(proj.map[am.hom.map].tolist(), proj.map.tolist())
    assert _pairs_set(am) == want


def test_pullback_construction_matches_naive():
    r4, r2 = zmod(4), zmod(2)
    alpha = enumerate_homs(r4, r2)[0]
    beta = identity_hom(r2)
    pb = pullback(alpha, beta)
    want = pullback_pairs(alpha.map.tolist(), beta.map.tolist())
    assert frozenset(map(tuple, pb.pairs.tolist())) == want


def test_kernel_identity_check_passes():
    p22, r2 = direct_product([zmod(2), zmod(2)]), zmod(2)
    alpha = enumerate_homs(p22, r2)[0]
    beta = enumerate_homs(zmod(4), r2)[0]
    rep = kernel_identity_check(alpha, beta)
    assert rep.status == PASS and rep.witness("kernel_matches") == "True"


def test_factor_check_positive_and_negative():
    r4, r2 = zmod(4), zmod(2)
    f = enumerate_homs(r4, r2)[0]
    pos = factor_check(f, identity_hom(r2), f)
    assert pos.status == PASS
    assert pos.witness("alpha_factors_through_beta") == "True"

    p22 = direct_product([zmod(2), zmod(2)])
    proj1, proj2 = enumerate_homs(p22, r2)
    neg = factor_check(proj1, identity_hom(r2), proj2)
    assert neg.status == PASS
    assert neg.witness("alpha_factors_through_beta") == "False"
    assert neg.witness("no_ideal_matches") == "True"


def test_same_amalgam_equivalence_both_ways():
    p22 = direct_product([zmod(2), zmod(2)])
    ideal = ideal_from_generators(p22, [p22.index_of("(1,0)")])
    collapse = next(h for h in enumerate_homs(p22, p22)
                    if h.map.tolist() == [0, 3, 0, 3])  # (x, y) -> (y, y)

    agree = same_amalgam(identity_hom(p22), collapse, ideal)
    assert agree.status == PASS
    assert agree.witness("difference_lands_in_ideal") == "True"
    assert agree.witness("element_sets_equal") == "True"
    assert agree.witness("homs_equal") == "False"

    # naive cross-check of the set equality
    s1 = amalgam_pairs(list(range(4)), p22.add.tolist(), ideal.indices.tolist())
    s2 = amalgam_pairs(collapse.map.tolist(), p22.add.tolist(),
                       ideal.indices.tolist())
    assert s1 == s2

    swap = next(h for h in enumerate_homs(p22, p22)
                if h.map.tolist() == [0, 2, 1, 3])
    differ = same_amalgam(identity_hom(p22), swap, ideal)
    assert differ.status == PASS
    assert differ.witness("difference_lands_in_ideal") == "False"
    assert differ.witness("element_sets_equal") == "False"


def test_n_amalgam_order_law_matches_naive_count():
    r = zmod(4)
    ideal = ideal_from_generators(r, [2])
    for n in (1, 2, 3):
        big = n_amalgam(identity_hom(r), ideal, n)
        assert big.ring.order == 4 * 2 ** n

    # naive n = 2 set: (a, (b1, b2)) with bi = a + ji
    naive = {
        (a, (r.add[a, j1], r.add[a, j2]))
        for a in range(4)
        for j1 in ideal.indices.tolist()
        for j2 in ideal.indices.tolist()
    }
    assert len(naive) == 16


def test_iter_iso_small_cases():
    r = zmod(4)
    ideal = ideal_from_generators(r, [2])
    for n, order in ((2, 16), (3, 32)):
        rep = iter_iso_check(identity_hom(r), ideal, n)
        assert rep.status == PASS
        assert rep.witness("witness_is_bijective_hom") == "True"
        assert rep.witness("left_order") == str(order)
    with pytest.raises(HypothesisViolated):
        iter_iso_check(identity_hom(r), ideal, 1)


def test_retraction_criterion_positive():
    p22, r2 = direct_product([zmod(2), zmod(2)]), zmod(2)
    alpha = enumerate_homs(p22, r2)[0]
    rep = retraction_criterion_check(alpha, identity_hom(r2))
    assert rep.status == PASS
    assert rep.witness("section_found") == "True"
    assert rep.witness("reconstruction_set_equal") == "True"


def test_retraction_criterion_negative_is_certified():
    r2 = zmod(2)
    beta = enumerate_homs(zmod(4), r2)[0]
    rep = retraction_criterion_check(identity_hom(r2), beta)
    assert rep.status == PASS
    assert rep.witness("section_found") == "False"
    assert rep.witness("no_presentation_exists") == "True"


def test_retraction_roundtrip_recovers_ideal():
    r = zmod(6)
    am = duplication(r, ideal_from_generators(r, [2]))
    rep = retraction_roundtrip(am)
    assert rep.status == PASS
    assert rep.witness("recovered_ideal_equals_J") == "True"


def test_pullback_reduced_implications():
    p22, r2 = direct_product([zmod(2), zmod(2)]), zmod(2)
    alpha = enumerate_homs(p22, r2)[0]
    beta = enumerate_homs(zmod(4), r2)[0]
    rep = pullback_reduced_check(alpha, beta)
    assert rep.status == PASS
    assert rep.witness("necessary_condition_holds") == "True"


def test_canonical_isos_on_surjective_instance():
    r = zmod(6)
    am = duplication(r, ideal_from_generators(r, [3]))
    rep = canonical_isos(am)
    assert rep.status == PASS
    assert rep.witness("hom_surjective") == "True"
    assert "valid=True" in rep.witness("mod_embedded_ideal_iso_base_quotient")
    assert "valid=True" in rep.witness("mod_zero_cross_J_iso_base")
    assert "valid=True" in rep.witness("surjective_variant_iso_target_quotient")


def test_canonical_isos_on_non_surjective_instance():
    p22 = direct_product([zmod(2), zmod(2)])
    diag = enumerate_homs(zmod(2), p22)[0]  # 1 -> (1,1), not onto
    ideal = ideal_from_generators(p22, [p22.index_of("(1,0)")])
    rep = canonical_isos(amalgam(diag, ideal))
    assert rep.status == PASS
    assert rep.witness("hom_surjective") == "False"


def test_alt_pullbacks_validate():
    r = zmod(6)
    am = duplication(r, ideal_from_generators(r, [2]))
    rep = alt_pullback_checks(am)
    assert rep.status == PASS
    assert rep.witness("presentation_over_A_x_BJ") == "True"
    assert rep.witness("presentation_over_AI_x_BJ") == "True"


def test_image_plus_ideal_subring():
    f = enumerate_homs(zmod(4), zmod(2))[0]
    j = zero_ideal(zmod(2))
    sub = image_plus_ideal(f, j)
    assert sub.size == 2
    rep = image_plus_ideal_check(f, unit_ideal(zmod(2)))
    assert rep.status == PASS


def test_dotted_sum_split_sequence():
    r = zmod(4)
    part, _ = ideal_as_rng(ideal_from_generators(r, [2]))
    ds = dorroh(part)
    rep = split_sequence_check(ds)
    assert rep.status == PASS


def test_dorroh_check_and_characteristic_guard():
    r = zmod(4)
    part, _ = ideal_as_rng(ideal_from_generators(r, [2]))
    rep = dorroh_check(part)
    assert rep.status == PASS
    assert rep.witness("has_identity") == "True"
    assert "valid: True" in rep.witness("quotient_by_part_iso_zmod")
    with pytest.raises(InvalidParameter):
        dorroh(part, 3)  # 3 is not a multiple of the characteristic 2
    bigger = dorroh_check(part, 4)
    assert bigger.status == PASS


def test_reduced_converse_search_reports_scan():
    r6 = zmod(6)
    pool = [duplication(r6, ideal_from_generators(r6, [2])),
            duplication(zmod(4), ideal_from_generators(zmod(4), [2]))]
    rep = reduced_converse_search(pool)
    assert rep.status == PASS
    assert rep.witness("instances_scanned") == "2"


def test_dotted_sum_rejects_nonmodule_action():
    r = zmod(4)
    part, _ = ideal_as_rng(ideal_from_generators(r, [2]))
    bad = np.zeros((4, 2), dtype=np.int64)  # 1 . x = 0 breaks unitality
    with pytest.raises(FinringError):
        dotted_sum(r, part, bad)
