"""Finite commutative rngs presented by explicit Cayley tables.

A ring here is a carrier 0..order-1 plus two order x order numpy tables for
addition and multiplication, a distinguished zero, an optional multiplicative
identity (None for rngs without one), and one display label per element.
Instances are immutable. Equality is structural: same tables, same zero/one,
same labels. `name` and `provenance` are descriptive and never compared.

Every constructor validates its output unless told not to, so an object that
exists is an object whose axioms were machine-checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import config
from .errors import (
    AmbientMismatch,
    InvalidParameter,
    MalformedTable,
    MissingIdentity,
    SizeGuardExceeded,
)
from .reports import ValidationReport, Violation

_TABLE_DTYPE = np.int32

# Provenance tags, fixed vocabulary.
PROVENANCES = (
    "zmod",
    "product",
    "quotient",
    "subring",
    "amalgam",
    "pullback",
    "table",
    "trunc_poly",
    "localization",
    "dotted_sum",
    "idealization",
)


def _blocks(n: int, cells_per_block: int = 1 << 21) -> Iterator[tuple[int, int]]:
    """Row-block ranges keeping roughly cells_per_block table cells in flight."""
    step = max(1, cells_per_block // max(n, 1))
    for i0 in range(0, n, step):
        yield i0, min(n, i0 + step)


class FiniteRng:
    """A finite commutative rng given by explicit operation tables."""

    def __init__(
        self,
        add,
        mul,
        zero: int,
        one: int | None,
        labels: Sequence[str],
        provenance: str = "table",
        name: str | None = None,
        check: bool = True,
    ):
        add = np.ascontiguousarray(np.asarray(add, dtype=_TABLE_DTYPE))
        mul = np.ascontiguousarray(np.asarray(mul, dtype=_TABLE_DTYPE))
        if add.ndim != 2 or add.shape[0] != add.shape[1]:
            raise MalformedTable("addition table must be square")
        n = int(add.shape[0])
        if n == 0:
            raise MalformedTable("carrier must be nonempty")
        if mul.shape != (n, n):
            raise MalformedTable("multiplication table shape differs from addition table")
        if n > config.size_guard():
            raise SizeGuardExceeded(f"order {n} exceeds size guard {config.size_guard()}")
        for table, which in ((add, "addition"), (mul, "multiplication")):
            if int(table.min()) < 0 or int(table.max()) >= n:
                raise MalformedTable(f"{which} table entry out of range 0..{n - 1}")
        zero = int(zero)
        if not 0 <= zero < n:
            raise MalformedTable("zero index out of range")
        if one is not None:
            one = int(one)
            if not 0 <= one < n:
                raise MalformedTable("one index out of range")
        labels = tuple(str(lab) for lab in labels)
        if len(labels) != n:
            raise MalformedTable("label count differs from order")
        if len(set(labels)) != n:
            raise MalformedTable("labels must be pairwise distinct")
        if provenance not in PROVENANCES:
            raise InvalidParameter(f"unknown provenance tag {provenance!r}")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = n
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.labels = labels
        self.provenance = provenance
        self.name = name if name is not None else provenance
        self._neg: np.ndarray | None = None
        self._nil: np.ndarray | None = None
        self._char: int | None = None
        self._label_pos: dict[str, int] | None = None
        self._hash: int | None = None
        if check:
            report = validate_rng(self)
            if not report.ok:
                raise MalformedTable(str(report))

    # -- identity and container protocol ------------------------------------

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteRng):
            return NotImplemented
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and self.labels == other.labels
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.order, self.zero, self.one, self.labels, self.add.tobytes(), self.mul.tobytes())
            )
        return self._hash

    def __repr__(self) -> str:
        return f"<FiniteRng {self.name} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    # -- element access ------------------------------------------------------

    @property
    def has_one(self) -> bool:
        return self.one is not None

    def require_one(self) -> int:
        if self.one is None:
            raise MissingIdentity(f"{self.name} has no multiplicative identity")
        return self.one

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, label: str) -> int:
        if self._label_pos is None:
            self._label_pos = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self._label_pos[label]
        except KeyError:
            raise InvalidParameter(f"{self.name} has no element labeled {label!r}") from None

    def element(self, i: int) -> "Element":
        if not 0 <= i < self.order:
            raise InvalidParameter(f"index {i} out of range for {self.name}")
        return Element(self, i)

    def by_label(self, label: str) -> "Element":
        return Element(self, self.index_of(label))

    def elements(self) -> Iterator["Element"]:
        for i in range(self.order):
            yield Element(self, i)

    # -- table views ----------------------------------------------------------

    def neg_table(self) -> np.ndarray:
        if self._neg is None:
            neg = np.argmax(self.add == self.zero, axis=1).astype(_TABLE_DTYPE)
            neg.setflags(write=False)
            self._neg = neg
        return self._neg

    def sub(self, x, y):
        """x - y, vectorized over numpy index arrays."""
        return self.add[x, self.neg_table()[y]]


@dataclass(frozen=True)
class Element:
    """One ring element: a ring reference plus an index. Arithmetic operators
    look up the owning ring's tables and refuse mixed-ring operands."""

    ring: FiniteRng
    index: int

    @property
    def label(self) -> str:
        return self.ring.labels[self.index]

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element) or self.ring != other.ring:
            raise AmbientMismatch("elements belong to different rings")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ring, int(self.ring.add[self.index, other.index]))

    def __mul__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.ring, int(self.ring.mul[self.index, other.index]))

    def __neg__(self) -> "Element":
        return Element(self.ring, int(self.ring.neg_table()[self.index]))

    def __sub__(self, other: "Element") -> "Element":
        return self.__add__(-other)

    def __pow__(self, k: int) -> "Element":
        if k < 1:
            raise InvalidParameter("exponent must be >= 1 for a rng element")
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    @property
    def is_zero(self) -> bool:
        return self.index == self.ring.zero

    def __repr__(self) -> str:
        return f"<{self.label} in {self.ring.name}>"


# -- axiom validation ---------------------------------------------------------


def _assoc_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    n = table.shape[0]
    for i0, i1 in _blocks(n):
        lhs = table[table[i0:i1]]
        rhs = table[i0:i1][:, table]
        if not np.array_equal(lhs, rhs):
            di, j, k = np.argwhere(lhs != rhs)[0]
            return int(i0 + di), int(j), int(k)
    return None


def _distrib_witness(add: np.ndarray, mul: np.ndarray) -> tuple[int, int, int] | None:
    n = add.shape[0]
    for i0, i1 in _blocks(n):
        lhs = mul[i0:i1][:, add]
        rhs = add[mul[i0:i1][:, :, None], mul[i0:i1][:, None, :]]
        if not np.array_equal(lhs, rhs):
            di, j, k = np.argwhere(lhs != rhs)[0]
            return int(i0 + di), int(j), int(k)
    return None


def validate_rng(ring: FiniteRng) -> ValidationReport:
    """Scan every rng axiom over the full tables.

    Each violated axiom is reported once with a concrete witness tuple, so a
    failed report is directly actionable.
    """
    add, mul, n, lab = ring.add, ring.mul, ring.order, ring.labels
    violations: list[Violation] = []

    if not np.array_equal(add, add.T):
        i, j = np.argwhere(add != add.T)[0]
        violations.append(Violation("add_commutative", (lab[i], lab[j])))
    w = _assoc_witness(add)
    if w is not None:
        violations.append(Violation("add_associative", (lab[w[0]], lab[w[1]], lab[w[2]])))
    row = add[ring.zero]
    if not np.array_equal(row, np.arange(n)):
        x = int(np.argwhere(row != np.arange(n))[0][0])
        violations.append(Violation("zero_neutral", (lab[x],)))
    has_inverse = (add == ring.zero).any(axis=1)
    if not has_inverse.all():
        x = int(np.argwhere(~has_inverse)[0][0])
        violations.append(Violation("add_inverse", (lab[x],)))

    mul_comm = np.array_equal(mul, mul.T)
    if not mul_comm:
        i, j = np.argwhere(mul != mul.T)[0]
        violations.append(Violation("mul_commutative", (lab[i], lab[j])))
    w = _assoc_witness(mul)
    if w is not None:
        violations.append(Violation("mul_associative", (lab[w[0]], lab[w[1]], lab[w[2]])))

    w = _distrib_witness(add, mul)
    if w is not None:
        violations.append(Violation("distributive", (lab[w[0]], lab[w[1]], lab[w[2]])))
    elif not mul_comm:
        # without commutativity the mirrored law is independent
        w = _distrib_witness(add, mul.T)
        if w is not None:
            violations.append(Violation("distributive_right", (lab[w[0]], lab[w[1]], lab[w[2]])))

    if ring.one is not None:
        row = mul[ring.one]
        if not np.array_equal(row, np.arange(n)):
            x = int(np.argwhere(row != np.arange(n))[0][0])
            violations.append(Violation("one_neutral", (lab[x],)))

    return ValidationReport(subject=ring.name, violations=tuple(violations))


# -- constructors --------------------------------------------------------------


def _detect_one(add: np.ndarray, mul: np.ndarray) -> int | None:
    n = mul.shape[0]
    hits = np.argwhere((mul == np.arange(n)).all(axis=1))
    return int(hits[0][0]) if len(hits) else None


def from_tables(
    add,
    mul,
    zero: int,
    one: int | None | str = "auto",
    labels: Sequence[str] | None = None,
    provenance: str = "table",
    name: str | None = None,
) -> FiniteRng:
    """Build a ring from raw tables. one="auto" detects an identity if any."""
    add = np.asarray(add, dtype=_TABLE_DTYPE)
    mul = np.asarray(mul, dtype=_TABLE_DTYPE)
    if one == "auto":
        if add.ndim != 2 or add.shape != mul.shape or add.shape[0] != add.shape[1]:
            raise MalformedTable("tables must be square and of equal shape")
        one = _detect_one(add, mul)
    if labels is None:
        labels = [str(i) for i in range(add.shape[0])]
    return FiniteRng(add, mul, zero, one, labels, provenance=provenance, name=name)


def rename(ring: FiniteRng, name: str) -> FiniteRng:
    """Same ring, different display name (structural equality is unaffected)."""
    out = FiniteRng(
        ring.add, ring.mul, ring.zero, ring.one, ring.labels,
        provenance=ring.provenance, name=name, check=False,
    )
    return out


def zmod(n: int) -> FiniteRng:
    """The ring of integers modulo n, elements labeled by their residues."""
    if n < 1:
        raise InvalidParameter("zmod needs n >= 1")
    if n > config.size_guard():
        raise SizeGuardExceeded(f"order {n} exceeds size guard {config.size_guard()}")
    r = np.arange(n, dtype=np.int64)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    one = 0 if n == 1 else 1
    labels = [str(i) for i in range(n)]
    return FiniteRng(add, mul, 0, one, labels, provenance="zmod", name=f"zmod({n})")


def direct_product(factors: Sequence[FiniteRng], name: str | None = None) -> FiniteRng:
    """Componentwise product. Element order is lexicographic in the factor
    indices with the first factor most significant; labels are "(a,b,...)"."""
    factors = list(factors)
    if not factors:
        raise InvalidParameter("direct_product needs at least one factor")
    dims = tuple(f.order for f in factors)
    order = 1
    for d in dims:
        order *= d
        if order > config.size_guard():
            raise SizeGuardExceeded(f"product order exceeds size guard {config.size_guard()}")
    digits = np.unravel_index(np.arange(order), dims)
    add = np.empty((order, order), dtype=_TABLE_DTYPE)
    mul = np.empty((order, order), dtype=_TABLE_DTYPE)
    for i0, i1 in _blocks(order):
        add_parts = [f.add[digits[k][i0:i1, None], digits[k][None, :]] for k, f in enumerate(factors)]
        mul_parts = [f.mul[digits[k][i0:i1, None], digits[k][None, :]] for k, f in enumerate(factors)]
        add[i0:i1] = np.ravel_multi_index(tuple(add_parts), dims)
        mul[i0:i1] = np.ravel_multi_index(tuple(mul_parts), dims)
    zero = int(np.ravel_multi_index(tuple(f.zero for f in factors), dims))
    one = None
    if all(f.has_one for f in factors):
        one = int(np.ravel_multi_index(tuple(f.one for f in factors), dims))
    labels = [
        "(" + ",".join(parts) + ")"
        for parts in itertools.product(*[f.labels for f in factors])
    ]
    if name is None:
        name = "product(" + ",".join(f.name for f in factors) + ")"
    return FiniteRng(add, mul, zero, one, labels, provenance="product", name=name)


def _monomials(num_vars: int, max_deg: int) -> list[tuple[int, ...]]:
    monos = [
        e
        for e in itertools.product(range(max_deg + 1), repeat=num_vars)
        if sum(e) <= max_deg
    ]
    monos.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return monos


def _mono_str(expts: tuple[int, ...], num_vars: int) -> str:
    parts = []
    for v, e in enumerate(expts):
        if e == 0:
            continue
        var = "X" if num_vars == 1 else f"X{v + 1}"
        parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts)


def trunc_poly(base: FiniteRng, num_vars: int, max_deg: int) -> FiniteRng:
    """Polynomials over `base` in num_vars variables, truncated so that every
    monomial of total degree above max_deg is zero. Elements are coefficient
    assignments over the degree-sorted monomial list; the element index is the
    mixed-radix number of its coefficient indices (first monomial most
    significant), which makes the ordering reproducible."""
    if num_vars < 1 or max_deg < 0:
        raise InvalidParameter("trunc_poly needs num_vars >= 1 and max_deg >= 0")
    monos = _monomials(num_vars, max_deg)
    m = len(monos)
    order = base.order**m
    if order > config.size_guard():
        raise SizeGuardExceeded(
            f"trunc_poly order {base.order}^{m} exceeds size guard {config.size_guard()}"
        )
    dims = (base.order,) * m
    digits = np.unravel_index(np.arange(order), dims)
    slot = {e: t for t, e in enumerate(monos)}
    prod_slot: list[list[int | None]] = [
        [
            slot.get(tuple(a + b for a, b in zip(e1, e2)))
            if sum(e1) + sum(e2) <= max_deg
            else None
            for e2 in monos
        ]
        for e1 in monos
    ]
    add = np.empty((order, order), dtype=_TABLE_DTYPE)
    mul = np.empty((order, order), dtype=_TABLE_DTYPE)
    for i0, i1 in _blocks(order):
        parts = [base.add[digits[t][i0:i1, None], digits[t][None, :]] for t in range(m)]
        add[i0:i1] = np.ravel_multi_index(tuple(parts), dims)
        res = [np.full((i1 - i0, order), base.zero, dtype=_TABLE_DTYPE) for _ in range(m)]
        for s in range(m):
            for t in range(m):
                p = prod_slot[s][t]
                if p is None:
                    continue
                term = base.mul[digits[s][i0:i1, None], digits[t][None, :]]
                res[p] = base.add[res[p], term]
        mul[i0:i1] = np.ravel_multi_index(tuple(res), dims)
    zero = int(np.ravel_multi_index((base.zero,) * m, dims))
    one = None
    if base.has_one:
        one_digits = [base.zero] * m
        one_digits[0] = base.one
        one = int(np.ravel_multi_index(tuple(one_digits), dims))
    labels = []
    col = np.stack(digits, axis=1)
    for i in range(order):
        terms = []
        for t in range(m):
            c = int(col[i, t])
            if c == base.zero:
                continue
            mono = _mono_str(monos[t], num_vars)
            if not mono:
                terms.append(base.labels[c])
            elif base.has_one and c == base.one:
                terms.append(mono)
            else:
                coeff = base.labels[c]
                if "+" in coeff or "-" in coeff:
                    coeff = f"({coeff})"
                terms.append(coeff + mono)
        labels.append("+".join(terms) if terms else base.labels[base.zero])
    return FiniteRng(
        add, mul, zero, one, labels,
        provenance="trunc_poly",
        name=f"pol({base.name},{num_vars},{max_deg})",
    )


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division of dense little-endian coefficient lists over Z/p, den monic."""
    num = num[:]
    q = [0] * max(1, len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] % p
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] = (num[shift + i] - c * d) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            den = list(low) + [1]
            _, rem = _poly_divmod(poly, den, p)
            if rem == [0]:
                return False
    return True


def galois_field(q: int) -> FiniteRng:
    """The finite field with q elements, q a prime power. For q = p^k with
    k > 1 the field is F_p[w]/(m(w)) for the lexicographically first monic
    irreducible m of degree k, so the construction is reproducible."""
    if q < 2:
        raise InvalidParameter("galois_field needs a prime power >= 2")
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    k, t = 0, q
    while t % p == 0:
        t //= p
        k += 1
    if t != 1:
        raise InvalidParameter(f"{q} is not a prime power")
    if q > config.size_guard():
        raise SizeGuardExceeded(f"order {q} exceeds size guard {config.size_guard()}")
    if k == 1:
        return rename(zmod(p), f"gf({q})")
    irr = None
    for low in itertools.product(range(p), repeat=k):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            irr = cand
            break
    assert irr is not None
    # reduction of w^d for d up to 2k-2, little-endian over F_p
    red = np.zeros((2 * k - 1, k), dtype=np.int64)
    for d in range(k):
        red[d, d] = 1
    for d in range(k, 2 * k - 1):
        prev = red[d - 1]
        shifted = np.zeros(k + 1, dtype=np.int64)
        shifted[1:] = prev
        top = shifted[k] % p
        shifted = shifted[:k] - top * np.array(irr[:k], dtype=np.int64)
        red[d] = shifted % p
    # element digits, little-endian: index = sum c_i p^i
    powers = p ** np.arange(k, dtype=np.int64)
    E = (np.arange(q)[:, None] // powers[None, :]) % p
    add = np.empty((q, q), dtype=_TABLE_DTYPE)
    mul = np.empty((q, q), dtype=_TABLE_DTYPE)
    for i0, i1 in _blocks(q, 1 << 19):
        add[i0:i1] = ((E[i0:i1, None, :] + E[None, :, :]) % p) @ powers
        conv = np.zeros((i1 - i0, q, 2 * k - 1), dtype=np.int64)
        for s in range(k):
            for t2 in range(k):
                conv[:, :, s + t2] += E[i0:i1, s][:, None] * E[:, t2][None, :]
        final = np.tensordot(conv, red, axes=([2], [0])) % p
        mul[i0:i1] = final @ powers
    labels = []
    for i in range(q):
        terms = []
        for d in range(k):
            c = int(E[i, d])
            if c == 0:
                continue
            mono = "" if d == 0 else ("w" if d == 1 else f"w^{d}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        labels.append("+".join(terms) if terms else "0")
    return FiniteRng(add, mul, 0, 1, labels, provenance="table", name=f"gf({q})")


# -- whole-ring predicates ------------------------------------------------------


def characteristic(ring: FiniteRng) -> int:
    """Least n >= 1 with nx = 0 for every x (the additive exponent)."""
    if ring._char is not None:
        return ring._char
    n = ring.order
    cur = np.arange(n)
    for k in range(1, n + 1):
        if (cur == ring.zero).all():
            ring._char = k
            return k
        cur = ring.add[cur, np.arange(n)]
    raise MalformedTable("additive group has no finite exponent; tables are invalid")


def nilpotent_mask(ring: FiniteRng) -> np.ndarray:
    """Boolean mask of nilpotent elements (x^m = 0 for some m <= order)."""
    if ring._nil is not None:
        return ring._nil
    n = ring.order
    power = np.arange(n)
    steps = max(1, int(np.ceil(np.log2(max(n, 2)))))
    for _ in range(steps):
        power = ring.mul[power, power]
    mask = power == ring.zero
    mask.setflags(write=False)
    ring._nil = mask
    return mask


def is_reduced(ring: FiniteRng) -> bool:
    """True when zero is the only nilpotent element."""
    return int(nilpotent_mask(ring).sum()) == 1


def is_domain(ring: FiniteRng) -> bool:
    """True for a nonzero unital ring without zero divisors."""
    ring.require_one()
    if ring.order == 1:
        return False
    nz = np.arange(ring.order) != ring.zero
    return not (ring.mul[np.ix_(nz, nz)] == ring.zero).any()


def is_field(ring: FiniteRng) -> bool:
    """True for a nonzero unital ring in which every nonzero element divides 1."""
    one = ring.require_one()
    if ring.order == 1:
        return False
    has_inv = (ring.mul == one).any(axis=1)
    nz = np.arange(ring.order) != ring.zero
    return bool(has_inv[nz].all())


# -- internal construction helpers (shared by subobjects and amalgamation) ------


def restrict_to_subset(
    ring: FiniteRng,
    indices: np.ndarray,
    provenance: str,
    name: str,
) -> FiniteRng:
    """The subset, sorted by ambient index, as a standalone rng with inherited
    labels. The subset must contain zero and be closed under + and *.
    An identity inside the subset is detected even when it differs from the
    ambient one (an ideal can be unital on its own)."""
    idx = np.asarray(sorted(int(i) for i in set(map(int, indices))), dtype=np.int64)
    if idx.size == 0:
        raise InvalidParameter("subset must be nonempty")
    pos = np.full(ring.order, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    if pos[ring.zero] < 0:
        raise InvalidParameter("subset must contain zero")
    add = pos[ring.add[np.ix_(idx, idx)]]
    mul = pos[ring.mul[np.ix_(idx, idx)]]
    if (add < 0).any():
        raise InvalidParameter("subset is not closed under addition")
    if (mul < 0).any():
        raise InvalidParameter("subset is not closed under multiplication")
    one = _detect_one(add.astype(_TABLE_DTYPE), mul.astype(_TABLE_DTYPE))
    labels = [ring.labels[i] for i in idx]
    return FiniteRng(
        add, mul, int(pos[ring.zero]), one, labels, provenance=provenance, name=name
    )


def pair_subring(
    left: FiniteRng,
    right: FiniteRng,
    pairs: Iterable[tuple[int, int]],
    provenance: str,
    name: str,
) -> tuple[FiniteRng, np.ndarray]:
    """A subring of left x right given by an explicit pair list, without
    materializing the full product. Pairs are sorted lexicographically; labels
    are "(a,b)". Returns the ring and the sorted (m, 2) pair array."""
    arr = np.array(sorted(set((int(a), int(b)) for a, b in pairs)), dtype=np.int64)
    if arr.size == 0:
        raise InvalidParameter("pair set must be nonempty")
    m = arr.shape[0]
    if m > config.size_guard():
        raise SizeGuardExceeded(f"order {m} exceeds size guard {config.size_guard()}")
    lookup = np.full((left.order, right.order), -1, dtype=np.int64)
    lookup[arr[:, 0], arr[:, 1]] = np.arange(m)
    pa, pb = arr[:, 0], arr[:, 1]
    add = np.empty((m, m), dtype=_TABLE_DTYPE)
    mul = np.empty((m, m), dtype=_TABLE_DTYPE)
    for i0, i1 in _blocks(m):
        ra = lookup[left.add[pa[i0:i1, None], pa[None, :]], right.add[pb[i0:i1, None], pb[None, :]]]
        rm = lookup[left.mul[pa[i0:i1, None], pa[None, :]], right.mul[pb[i0:i1, None], pb[None, :]]]
        if (ra < 0).any():
            raise InvalidParameter("pair set is not closed under addition")
        if (rm < 0).any():
            raise InvalidParameter("pair set is not closed under multiplication")
        add[i0:i1] = ra
        mul[i0:i1] = rm
    zero = int(lookup[left.zero, right.zero])
    if zero < 0:
        raise InvalidParameter("pair set must contain (0, 0)")
    one = None
    if left.has_one and right.has_one:
        cand = int(lookup[left.one, right.one])
        one = cand if cand >= 0 else None
    if one is None:
        one = _detect_one(add, mul)
    labels = [f"({left.labels[a]},{right.labels[b]})" for a, b in arr]
    ring = FiniteRng(add, mul, zero, one, labels, provenance=provenance, name=name)
    return ring, arr
