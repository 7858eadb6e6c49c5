"""Slow reference implementations used to cross-check the library.

Everything here is deliberately naive: plain Python loops over ints, no
vectorization, and no reuse of library logic beyond reading the finished
operation tables as nested sequences. Answers produced here are the
expected values the tests freeze against.
"""

from __future__ import annotations

from itertools import combinations, product


def ideal_closure(add, mul, zero: int, gens) -> frozenset[int]:
    """Smallest subset containing gens that is an additive subgroup and
    absorbs ring multiplication, by worklist."""
    n = len(add)
    cur = set(gens) | {zero}
    while True:
        new = set(cur)
        for x in cur:
            for y in cur:
                new.add(add[x][y])
            for r in range(n):
                new.add(mul[r][x])
        if new == cur:
            return frozenset(cur)
        cur = new


def nilpotent_set(mul, zero: int) -> frozenset[int]:
    n = len(mul)
    out = set()
    for x in range(n):
        p, seen = x, set()
        while p not in seen:
            if p == zero:
                out.add(x)
                break
            seen.add(p)
            p = mul[p][x]
    return frozenset(out)


def has_zero_divisors(mul, zero: int) -> bool:
    n = len(mul)
    return any(
        mul[x][y] == zero
        for x in range(n) if x != zero
        for y in range(n) if y != zero
    )


def is_domain(mul, zero: int, one) -> bool:
    return one is not None and one != zero and not has_zero_divisors(mul, zero)


def amalgam_pairs(f_map, b_add, j_indices) -> frozenset[tuple[int, int]]:
    """The element set {(a, f(a)+j)} by double loop."""
    return frozenset(
        (a, b_add[f_map[a]][j]) for a in range(len(f_map)) for j in j_indices
    )


def pullback_pairs(alpha_map, beta_map) -> frozenset[tuple[int, int]]:
    return frozenset(
        (a, b)
        for a in range(len(alpha_map))
        for b in range(len(beta_map))
        if alpha_map[a] == beta_map[b]
    )


def is_hom(a, b, fmap, unital: bool = True) -> bool:
    """fmap respects both tables of the rings a and b (tables read off the
    ring objects but compared entry by entry)."""
    for x in range(a.order):
        for y in range(a.order):
            if fmap[a.add[x][y]] != b.add[fmap[x]][fmap[y]]:
                return False
            if fmap[a.mul[x][y]] != b.mul[fmap[x]][fmap[y]]:
                return False
    if fmap[a.zero] != b.zero:
        return False
    if unital and fmap[a.one] != b.one:
        return False
    return True


def all_homs_brute(a, b, unital: bool = True) -> list[tuple[int, ...]]:
    """Every map a -> b checked against is_hom. Exponential; keep orders tiny."""
    out = []
    for fmap in product(range(b.order), repeat=a.order):
        if is_hom(a, b, fmap, unital):
            out.append(fmap)
    return out


def coset_partition(add, members, order: int) -> set[frozenset[int]]:
    """The partition of the index set into cosets of the additive subgroup
    given by the membership list."""
    sub = [i for i in range(order) if members[i]]
    return {frozenset(add[x][i] for i in sub) for x in range(order)}


def regular_mod(add, mul, members, order: int) -> list[int]:
    """Indices x with: x*y in the ideal implies y in the ideal."""
    return [
        x for x in range(order)
        if all(members[y] for y in range(order) if members[mul[x][y]])
    ]


def fraction_class_count(ring, s_indices) -> int:
    """Number of classes of pairs (a, s) under (a,s) ~ (b,t) iff
    u*(a*t - b*s) = 0 for some u in S."""
    n = ring.order
    sub = ring.sub

    def equiv(a, s, b, t):
        lhs = sub(int(ring.mul[a][t]), int(ring.mul[b][s]))
        return any(ring.mul[u][lhs] == ring.zero for u in s_indices)

    classes: list[tuple[int, int]] = []
    for a in range(n):
        for s in s_indices:
            if not any(equiv(a, s, b, t) for b, t in classes):
                classes.append((a, s))
    return len(classes)


def min_generator_size(module_add, action, zero: int, members=None) -> int:
    """Smallest k such that k elements generate the whole module, brute
    force over subsets. Tiny modules only."""
    n = len(module_add)
    universe = list(range(n))

    def span(gens) -> set[int]:
        cur = set(gens) | {zero}
        while True:
            new = set(cur)
            for x in cur:
                for y in cur:
                    new.add(module_add[x][y])
                for row in action:
                    new.add(row[x])
            if new == cur:
                return cur
            cur = new

    for k in range(n + 1):
        for gens in combinations(universe, k):
            if len(span(gens)) == n:
                return k
    raise AssertionError("module not generated by itself")


def poly_mul_truncated(a_coeffs, b_coeffs, base_add, base_mul,
                       zero: int, max_deg: int) -> tuple[int, ...]:
    """Single-variable truncated product: coefficient lists indexed by
    degree, entries are base-ring element indices."""
    out = [zero] * (max_deg + 1)
    for i, ca in enumerate(a_coeffs):
        for j, cb in enumerate(b_coeffs):
            if i + j <= max_deg:
                out[i + j] = base_add[out[i + j]][base_mul[ca][cb]]
    return tuple(out)
