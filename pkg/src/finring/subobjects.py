"""Ideals, subrings, quotients, localizations, and finite modules.

All subobjects are membership masks over an ambient ring, so set algebra is
numpy boolean algebra and every derived object remembers where it came from.
Canonical orderings: quotient classes and localization classes are sorted by
their least member (least ambient index, or lexicographically least fraction
pair), and subobjects materialize as standalone rings in ascending ambient
index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import (
    AmbientMismatch,
    EmptySet,
    InvalidParameter,
    MissingIdentity,
    NotMultiplicativelyClosed,
    SizeGuardExceeded,
)
from .reports import ValidationReport, Violation
from .rings import (
    Element,
    FiniteRng,
    is_domain,
    is_field,
    is_reduced,
    nilpotent_mask,
    restrict_to_subset,
)


def _as_index(ring: FiniteRng, x) -> int:
    if isinstance(x, Element):
        if x.ring != ring:
            raise AmbientMismatch("element belongs to a different ring")
        return x.index
    if isinstance(x, str):
        return ring.index_of(x)
    i = int(x)
    if not 0 <= i < ring.order:
        raise InvalidParameter(f"index {i} out of range for {ring.name}")
    return i


def _as_mask(ring: FiniteRng, members) -> np.ndarray:
    members = np.asarray(members)
    if members.dtype == bool:
        if members.shape != (ring.order,):
            raise InvalidParameter("membership mask has the wrong length")
        return members.copy()
    mask = np.zeros(ring.order, dtype=bool)
    for x in members:
        mask[_as_index(ring, x)] = True
    return mask


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal of `ring`, stored as a boolean membership mask."""

    ring: FiniteRng
    members: np.ndarray

    def __post_init__(self):
        mask = np.asarray(self.members, dtype=bool)
        mask.setflags(write=False)
        object.__setattr__(self, "members", mask)

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    @property
    def size(self) -> int:
        return int(self.members.sum())

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_unit(self) -> bool:
        return self.size == self.ring.order

    def contains(self, x) -> bool:
        return bool(self.members[_as_index(self.ring, x)])

    def labels(self) -> list[str]:
        return [self.ring.labels[i] for i in self.indices]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((self.ring, self.members.tobytes()))

    def __repr__(self) -> str:
        return f"<Ideal of {self.ring.name}, size {self.size}>"


@dataclass(frozen=True, eq=False)
class Subrng:
    """A subrng of `ring` (closed under + and *), stored as a mask."""

    ring: FiniteRng
    members: np.ndarray

    def __post_init__(self):
        mask = np.asarray(self.members, dtype=bool)
        mask.setflags(write=False)
        object.__setattr__(self, "members", mask)

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    @property
    def size(self) -> int:
        return int(self.members.sum())

    @property
    def has_one(self) -> bool:
        return self.ring.has_one and bool(self.members[self.ring.one])

    def contains(self, x) -> bool:
        return bool(self.members[_as_index(self.ring, x)])

    def labels(self) -> list[str]:
        return [self.ring.labels[i] for i in self.indices]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subrng):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((self.ring, self.members.tobytes()))

    def __repr__(self) -> str:
        return f"<Subrng of {self.ring.name}, size {self.size}>"


# -- ideal construction and arithmetic -----------------------------------------


def ideal_mask_witness(ring: FiniteRng, mask: np.ndarray) -> str | None:
    """None when mask is an ideal, else a short description of the failure."""
    if not mask[ring.zero]:
        return "missing zero"
    idx = np.flatnonzero(mask)
    neg = ring.neg_table()
    if not mask[neg[idx]].all():
        bad = idx[~mask[neg[idx]]][0]
        return f"not closed under negation at {ring.labels[bad]}"
    sums = ring.add[np.ix_(idx, idx)]
    if not mask[sums].all():
        i, j = np.argwhere(~mask[sums])[0]
        return f"not closed under + at ({ring.labels[idx[i]]}, {ring.labels[idx[j]]})"
    prods = ring.mul[:, idx]
    if not mask[prods].all():
        r, j = np.argwhere(~mask[prods])[0]
        return f"not absorbing at ({ring.labels[r]}, {ring.labels[idx[j]]})"
    return None


def ideal_from_members(ring: FiniteRng, members) -> Ideal:
    """Wrap an explicit member set after verifying it really is an ideal."""
    mask = _as_mask(ring, members)
    witness = ideal_mask_witness(ring, mask)
    if witness is not None:
        raise InvalidParameter(f"member set is not an ideal: {witness}")
    return Ideal(ring, mask)


def ideal_from_generators(ring: FiniteRng, generators) -> Ideal:
    """Smallest ideal containing the generators: closure under addition,
    negation, and multiplication by arbitrary ring elements."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    for g in generators:
        mask[_as_index(ring, g)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[ring.neg_table()[idx]] = True
        new[ring.add[np.ix_(idx, idx)].ravel()] = True
        new[ring.mul[:, idx].ravel()] = True
        if np.array_equal(new, mask):
            return Ideal(ring, mask)
        mask = new


def zero_ideal(ring: FiniteRng) -> Ideal:
    return ideal_from_generators(ring, [])


def unit_ideal(ring: FiniteRng) -> Ideal:
    mask = np.ones(ring.order, dtype=bool)
    return Ideal(ring, mask)


def _same_ambient(a, b) -> None:
    if a.ring != b.ring:
        raise AmbientMismatch("operands live in different ambient rings")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ambient(I, J)
    sums = I.ring.add[np.ix_(I.indices, J.indices)]
    mask = np.zeros(I.ring.order, dtype=bool)
    mask[sums.ravel()] = True
    return Ideal(I.ring, mask)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ambient(I, J)
    prods = I.ring.mul[np.ix_(I.indices, J.indices)].ravel()
    return ideal_from_generators(I.ring, np.unique(prods))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    _same_ambient(I, J)
    return Ideal(I.ring, I.members & J.members)


def is_idempotent_ideal(I: Ideal) -> bool:
    return ideal_product(I, I) == I


def nilradical(ring: FiniteRng) -> Ideal:
    return Ideal(ring, nilpotent_mask(ring).copy())


def annihilator_killed(ring: FiniteRng, s_indices: np.ndarray) -> np.ndarray:
    """Mask of x with tx = 0 for some t in the given set."""
    return (ring.mul[np.ix_(s_indices, np.arange(ring.order))] == ring.zero).any(axis=0)


# -- quotients -------------------------------------------------------------------


def coset_representatives(ring: FiniteRng, I: Ideal) -> tuple[np.ndarray, np.ndarray]:
    """(reps, class_of): reps are the least-index coset representatives in
    ascending order; class_of[x] is the class index of element x."""
    _require_same_ring(ring, I)
    cosets = ring.add[:, I.indices]
    rep_of = cosets.min(axis=1)
    reps = np.unique(rep_of)
    class_of = np.searchsorted(reps, rep_of)
    return reps, class_of


def _require_same_ring(ring: FiniteRng, sub) -> None:
    if sub.ring != ring:
        raise AmbientMismatch("subobject belongs to a different ring")


def quotient_ring(ring: FiniteRng, I: Ideal):
    """The quotient by an ideal together with the projection hom.

    Classes are ordered by least ambient representative; labels are the
    representative label in brackets.
    """
    from .morphisms import RingHom

    reps, class_of = coset_representatives(ring, I)
    m = reps.size
    add = class_of[ring.add[np.ix_(reps, reps)]]
    mul = class_of[ring.mul[np.ix_(reps, reps)]]
    zero = int(class_of[ring.zero])
    one = int(class_of[ring.one]) if ring.has_one else None
    labels = [f"[{ring.labels[r]}]" for r in reps]
    quotient = FiniteRng(
        add, mul, zero, one, labels,
        provenance="quotient", name=f"quot({ring.name},{I.size})",
    )
    proj = RingHom(ring, quotient, class_of, unital=ring.has_one)
    return quotient, proj


def is_prime(I: Ideal) -> bool:
    quotient, _ = quotient_ring(I.ring, I)
    return is_domain(quotient)

def is_maximal(I: Ideal) -> bool:
    quotient, _ = quotient_ring(I.ring, I)
    return is_field(quotient)

def is_radical(I: Ideal) -> bool:
    quotient, _ = quotient_ring(I.ring, I)
    return is_reduced(quotient)


def regular_elements_mod(ring: FiniteRng, I: Ideal) -> np.ndarray:
    """Indices of all s whose class in ring/I is nonzero and not a zero
    divisor. When ring/I is the zero ring the convention is that every
    element qualifies."""
    reps, class_of = coset_representatives(ring, I)
    m = reps.size
    if m == 1:
        return np.arange(ring.order)
    add = class_of[ring.add[np.ix_(reps, reps)]]
    mul = class_of[ring.mul[np.ix_(reps, reps)]]
    zero = int(class_of[ring.zero])
    nonzero_cols = np.arange(m) != zero
    kills = (mul[:, nonzero_cols] == zero).any(axis=1)
    regular_class = ~kills & (np.arange(m) != zero)
    return np.flatnonzero(regular_class[class_of])


def mult_closure(ring: FiniteRng, seed) -> np.ndarray:
    """Multiplicative closure of the seed with 1 adjoined, sorted indices."""
    one = ring.require_one()
    members = {one}
    members.update(_as_index(ring, x) for x in seed)
    frontier = list(members)
    while frontier:
        nxt = []
        for s in frontier:
            for t in list(members):
                p = int(ring.mul[s, t])
                if p not in members:
                    members.add(p)
                    nxt.append(p)
        frontier = nxt
    return np.array(sorted(members), dtype=np.int64)


def localization(ring: FiniteRng, s_indices) -> tuple:
    """Fractions a/s for s in a multiplicatively closed set containing 1.

    (a,s) and (a',s') are identified when t(as' - a's) = 0 for some t in S.
    Classes are labeled and ordered by their lexicographically least pair.
    Returns (localized ring, canonical hom a -> a/1).
    """
    from .morphisms import RingHom

    one = ring.require_one()
    s_idx = np.array(sorted({_as_index(ring, s) for s in s_indices}), dtype=np.int64)
    if s_idx.size == 0:
        raise EmptySet("localization set is empty")
    if one not in set(s_idx.tolist()):
        raise NotMultiplicativelyClosed("localization set must contain 1")
    in_s = np.zeros(ring.order, dtype=bool)
    in_s[s_idx] = True
    closed = in_s[ring.mul[np.ix_(s_idx, s_idx)]]
    if not closed.all():
        i, j = np.argwhere(~closed)[0]
        raise NotMultiplicativelyClosed(
            f"{ring.labels[s_idx[i]]} * {ring.labels[s_idx[j]]} leaves the set"
        )
    npairs = ring.order * s_idx.size
    if npairs > config.size_guard():
        raise SizeGuardExceeded(
            f"{npairs} fraction pairs exceed size guard {config.size_guard()}"
        )
    killed = annihilator_killed(ring, s_idx)
    pairs = np.array(
        [(a, int(s)) for a in range(ring.order) for s in s_idx], dtype=np.int64
    )
    cross = ring.mul[pairs[:, 0][:, None], pairs[:, 1][None, :]]
    diff = ring.sub(cross, cross.T)
    eq = killed[diff]
    rep_idx = eq.argmax(axis=1)
    reps_sorted = np.unique(rep_idx)
    class_of_pair = np.searchsorted(reps_sorted, rep_idx)
    m = reps_sorted.size
    rep_pairs = pairs[reps_sorted]
    ra, rs = rep_pairs[:, 0], rep_pairs[:, 1]
    lookup = np.full((ring.order, ring.order), -1, dtype=np.int64)
    lookup[pairs[:, 0], pairs[:, 1]] = class_of_pair
    num = ring.add[ring.mul[ra[:, None], rs[None, :]], ring.mul[ra[None, :], rs[:, None]]]
    den = ring.mul[rs[:, None], rs[None, :]]
    add = lookup[num, den]
    mul = lookup[ring.mul[ra[:, None], ra[None, :]], den]
    assert (add >= 0).all() and (mul >= 0).all()
    zero = int(lookup[ring.zero, one])
    one_cls = int(lookup[one, one])
    labels = [f"{ring.labels[a]}/{ring.labels[s]}" for a, s in rep_pairs]
    localized = FiniteRng(
        add, mul, zero, one_cls, labels,
        provenance="localization", name=f"loc({ring.name},{s_idx.size})",
    )
    lam = RingHom(ring, localized, lookup[np.arange(ring.order), one], unital=True)
    # kernel sanity: a/1 = 0 exactly when some t in S kills a
    assert np.array_equal(lam.map == zero, killed), "localization kernel mismatch"
    return localized, lam


# -- subrings --------------------------------------------------------------------


def subring_generated(ring: FiniteRng, seed, include_one: bool = True) -> Subrng:
    """Smallest subrng containing the seed (and 1 when include_one and the
    ambient ring is unital): closure under +, negation, and *."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    if include_one and ring.has_one:
        mask[ring.one] = True
    for g in seed:
        mask[_as_index(ring, g)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[ring.neg_table()[idx]] = True
        new[ring.add[np.ix_(idx, idx)].ravel()] = True
        new[ring.mul[np.ix_(idx, idx)].ravel()] = True
        if np.array_equal(new, mask):
            return Subrng(ring, mask)
        mask = new


def subrng_as_ring(sub: Subrng, name: str | None = None):
    """Materialize a subrng as a standalone ring plus the embedding hom."""
    from .morphisms import RingHom

    idx = sub.indices
    ring = restrict_to_subset(
        sub.ring, idx, "subring", name or f"sub({sub.ring.name},{sub.size})"
    )
    embed = RingHom(ring, sub.ring, idx.astype(np.int64), unital=sub.has_one)
    return ring, embed


def ideal_as_rng(I: Ideal, name: str | None = None):
    """Materialize an ideal as a standalone rng plus the (non-unital) embedding."""
    from .morphisms import RingHom

    idx = I.indices
    ring = restrict_to_subset(
        I.ring, idx, "subring", name or f"rng({I.ring.name},{I.size})"
    )
    embed = RingHom(ring, I.ring, idx.astype(np.int64), unital=False)
    return ring, embed


def all_ideals(ring: FiniteRng, cap: int | None = None) -> list[Ideal]:
    """Every ideal, found by closing each reachable ideal under one more
    generator; returned sorted by (size, membership mask) so the order is
    reproducible. `cap` truncates the sorted list."""
    seen: dict[bytes, Ideal] = {}
    start = zero_ideal(ring)
    queue = [start]
    seen[start.members.tobytes()] = start
    while queue:
        cur = queue.pop()
        outside = np.flatnonzero(~cur.members)
        for x in outside:
            bigger = ideal_from_generators(ring, list(cur.indices) + [int(x)])
            key = bigger.members.tobytes()
            if key not in seen:
                seen[key] = bigger
                queue.append(bigger)
    result = sorted(seen.values(), key=lambda i: (i.size, i.members.tobytes()))
    if cap is not None:
        result = result[:cap]
    return result


# -- finite modules ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """A finite module over `ring`: an additive table plus an action table
    of shape (|ring|, order)."""

    ring: FiniteRng
    order: int
    add: np.ndarray
    zero: int
    labels: tuple[str, ...]
    action: np.ndarray

    def __post_init__(self):
        add = np.asarray(self.add, dtype=np.int64)
        action = np.asarray(self.action, dtype=np.int64)
        add.setflags(write=False)
        action.setflags(write=False)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "labels", tuple(self.labels))

    def neg_table(self) -> np.ndarray:
        return np.argmax(self.add == self.zero, axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteModule):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.zero == other.zero
            and self.labels == other.labels
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.action, other.action)
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.order, self.zero, self.labels,
                     self.add.tobytes(), self.action.tobytes()))

    def __repr__(self) -> str:
        return f"<FiniteModule over {self.ring.name}, order {self.order}>"


def validate_module(M: FiniteModule) -> ValidationReport:
    """Abelian group axioms plus both distributive laws, associativity of the
    action, and 1x = x when the scalar ring is unital."""
    violations: list[Violation] = []
    add, act, n = M.add, M.action, M.order
    ring = M.ring
    lab = M.labels

    if add.shape != (n, n) or act.shape != (ring.order, n):
        return ValidationReport("module", (Violation("table_shape", ()),))
    if not np.array_equal(add, add.T):
        i, j = np.argwhere(add != add.T)[0]
        violations.append(Violation("add_commutative", (lab[i], lab[j])))
    lhs = add[add]
    rhs = add[:, add]
    if not np.array_equal(lhs, rhs):
        i, j, k = np.argwhere(lhs != rhs)[0]
        violations.append(Violation("add_associative", (lab[i], lab[j], lab[k])))
    if not np.array_equal(add[M.zero], np.arange(n)):
        x = int(np.argwhere(add[M.zero] != np.arange(n))[0][0])
        violations.append(Violation("zero_neutral", (lab[x],)))
    if not (add == M.zero).any(axis=1).all():
        x = int(np.argwhere(~(add == M.zero).any(axis=1))[0][0])
        violations.append(Violation("add_inverse", (lab[x],)))

    # a(x + y) = ax + ay
    lhs = act[:, add]
    rhs = add[act[:, :, None], act[:, None, :]]
    if not np.array_equal(lhs, rhs):
        a, x, y = np.argwhere(lhs != rhs)[0]
        violations.append(Violation("action_distributes_over_module_add",
                                    (ring.labels[a], lab[x], lab[y])))
    # (a + b)x = ax + bx
    lhs = act[ring.add]
    rhs = add[act[:, None, :], act[None, :, :]]
    if not np.array_equal(lhs, rhs):
        a, b, x = np.argwhere(lhs != rhs)[0]
        violations.append(Violation("action_distributes_over_scalar_add",
                                    (ring.labels[a], ring.labels[b], lab[x])))
    # (ab)x = a(bx)
    lhs = act[ring.mul]
    rhs = act[:, act][np.arange(ring.order)[:, None, None],
                      np.arange(ring.order)[None, :, None],
                      np.arange(n)[None, None, :]]
    if not np.array_equal(lhs, rhs):
        a, b, x = np.argwhere(lhs != rhs)[0]
        violations.append(Violation("action_associative",
                                    (ring.labels[a], ring.labels[b], lab[x])))
    if ring.has_one and not np.array_equal(act[ring.one], np.arange(n)):
        x = int(np.argwhere(act[ring.one] != np.arange(n))[0][0])
        violations.append(Violation("one_acts_as_identity", (lab[x],)))
    return ValidationReport("module", tuple(violations))


def module_via_hom(f, J: Ideal) -> FiniteModule:
    """The ideal J of f's codomain as a module over f's domain, with the
    action a.j = f(a) * j."""
    B = f.codomain
    _require_same_ring(B, J)
    idx = J.indices
    pos = np.full(B.order, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    add = pos[B.add[np.ix_(idx, idx)]]
    action = pos[B.mul[f.map[:, None], idx[None, :]]]
    assert (add >= 0).all() and (action >= 0).all()
    M = FiniteModule(
        ring=f.domain,
        order=int(idx.size),
        add=add,
        zero=int(pos[B.zero]),
        labels=tuple(B.labels[i] for i in idx),
        action=action,
    )
    report = validate_module(M)
    if not report.ok:
        raise InvalidParameter(f"hom action does not give a module: {report}")
    return M


def full_module(f) -> FiniteModule:
    """f's codomain as a module over f's domain."""
    return module_via_hom(f, unit_ideal(f.codomain))


def submodule_generated(M: FiniteModule, seed) -> np.ndarray:
    """Membership mask of the submodule generated by seed positions."""
    mask = np.zeros(M.order, dtype=bool)
    mask[M.zero] = True
    for x in seed:
        mask[int(x)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[M.add[np.ix_(idx, idx)].ravel()] = True
        new[M.action[:, idx].ravel()] = True
        if np.array_equal(new, mask):
            return mask
        mask = new


@dataclass(frozen=True)
class GeneratorSearch:
    indices: tuple[int, ...]
    minimal: bool
    evaluations: int

    def labels(self, M: FiniteModule) -> list[str]:
        return [M.labels[i] for i in self.indices]


def module_min_generators(M: FiniteModule) -> GeneratorSearch:
    """A generating set of minimum size, by exhaustive subset search in
    (size, lexicographic) order. If the search would evaluate more than the
    subset budget it falls back to a greedy superset and says so via
    minimal=False."""
    if M.order == 1:
        return GeneratorSearch((), True, 0)
    pool = [i for i in range(M.order) if i != M.zero]
    budget = config.DEFAULT_SUBSET_BUDGET
    evaluations = 0
    for k in range(1, len(pool) + 1):
        for comb in itertools.combinations(pool, k):
            evaluations += 1
            if evaluations > budget:
                return _greedy_generators(M, evaluations)
            if submodule_generated(M, comb).all():
                return GeneratorSearch(tuple(comb), True, evaluations)
    raise InvalidParameter("module cannot be generated by its own elements")


def _greedy_generators(M: FiniteModule, evaluations: int) -> GeneratorSearch:
    chosen: list[int] = []
    mask = submodule_generated(M, chosen)
    while not mask.all():
        best, best_size = None, -1
        for x in range(M.order):
            if mask[x]:
                continue
            size = int(submodule_generated(M, chosen + [x]).sum())
            evaluations += 1
            if size > best_size:
                best, best_size = x, size
        chosen.append(best)
        mask = submodule_generated(M, chosen)
    return GeneratorSearch(tuple(chosen), False, evaluations)
