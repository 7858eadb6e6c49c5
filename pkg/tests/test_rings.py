"""Base ring constructors against naive arithmetic."""

from __future__ import annotations

import numpy as np
import pytest

from finring.config import guard_limit
from finring.errors import InvalidParameter, MalformedTable, SizeGuardExceeded
from finring.rings import (
    FiniteRng,
    characteristic,
    direct_product,
    from_tables,
    galois_field,
    is_domain,
    is_field,
    is_reduced,
    nilpotent_mask,
    trunc_poly,
    zmod,
)

from oracles import nilpotent_set, poly_mul_truncated


def test_zmod_tables_match_modular_arithmetic():
    for n in (2, 3, 4, 6, 9, 12):
        r = zmod(n)
        for x in range(n):
            for y in range(n):
                assert r.add[x, y] == (x + y) % n
                assert r.mul[x, y] == (x * y) % n
        assert r.zero == 0 and r.one == 1 % n
        assert r.labels == tuple(str(i) for i in range(n))
        assert characteristic(r) == n


def test_zmod_rejects_nonpositive_modulus():
    with pytest.raises(InvalidParameter):
        zmod(0)


def test_direct_product_is_componentwise():
    r = direct_product([zmod(2), zmod(3)])
    assert r.order == 6
    for i in range(6):
        for j in range(6):
            a1, a2 = divmod(i, 3)
            b1, b2 = divmod(j, 3)
            s = (a1 + b1) % 2 * 3 + (a2 + b2) % 3
            p = (a1 * b1) % 2 * 3 + (a2 * b2) % 3
            assert r.add[i, j] == s
            assert r.mul[i, j] == p
    assert r.labels[5] == "(1,2)"
    assert characteristic(r) == 6


def test_trunc_poly_single_variable_matches_naive_convolution():
    base = zmod(3)
    r = trunc_poly(base, 1, 2)
    assert r.order == 27
    # element index encodes coefficients with the constant digit most
    # significant: index = c0*9 + c1*3 + c2
    def coeffs(i):
        return (i // 9, (i // 3) % 3, i % 3)

    def index(c):
        return c[0] * 9 + c[1] * 3 + c[2]

    for i in range(27):
        for j in range(27):
            want = poly_mul_truncated(
                coeffs(i), coeffs(j), base.add.tolist(), base.mul.tolist(),
                0, 2,
            )
            assert r.mul[i, j] == index(want)
    x = r.index_of("X")
    assert r.mul[x, r.mul[x, x]] == r.zero


def test_trunc_poly_nilpotents_are_zero_constant_polynomials():
    r = trunc_poly(zmod(2), 2, 1)
    naive = nilpotent_set(r.mul.tolist(), r.zero)
    assert frozenset(np.flatnonzero(nilpotent_mask(r)).tolist()) == naive
    assert not is_reduced(r)


def test_galois_field_of_order_four():
    f = galois_field(4)
    assert is_field(f) and is_domain(f) and is_reduced(f)
    assert characteristic(f) == 2
    w = f.index_of("w")
    # w satisfies w^2 = w + 1 and generates the multiplicative group
    assert f.mul[w, w] == f.add[w, f.one]
    assert f.mul[w, f.mul[w, w]] == f.one


def test_galois_field_rejects_non_prime_power():
    with pytest.raises(InvalidParameter):
        galois_field(6)


def test_from_tables_rejects_broken_distributivity():
    add = np.array([[0, 1], [1, 0]])
    mul = np.array([[0, 1], [1, 1]])  # 0*1 = 1 contradicts (0+0)*1 = 0*1 + 0*1
    with pytest.raises(MalformedTable):
        from_tables(add, mul, 0)


def test_structural_equality_ignores_name():
    a = zmod(4)
    b = FiniteRng(a.add, a.mul, a.zero, a.one, a.labels, name="other")
    assert a == b
    assert hash(a) == hash(b)


def test_size_guard_blocks_large_constructions():
    with guard_limit(16):
        with pytest.raises(SizeGuardExceeded):
            zmod(17)
        zmod(16)
    zmod(17)


def test_element_wrapper_arithmetic():
    r = zmod(6)
    two, three = r.by_label("2"), r.by_label("3")
    assert (two + three).label == "5"
    assert (two * three).label == "0"
    with pytest.raises(InvalidParameter):
        r.index_of("6")
