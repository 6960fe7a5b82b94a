"""Dense-table finite unital rings.

A ring lives on the index set {0, ..., order-1}; addition and multiplication
are row-major integer tables, so every arithmetic step is one table lookup.
All distinguished subsets (units, idempotents, nilpotents, center,
quasi-nilpotents, Jacobson radical) are computed by exact exhaustive scans,
vectorized with numpy.  Everything here is exact integer arithmetic; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 20_000
# Full triple-scan validation up to this order; random triple sampling above.
FULL_TRIPLE_ORDER = 64
SAMPLED_TRIPLES = 100_000


class RingError(Exception):
    """A table violates the ring axioms or an operation precondition."""


class CapExceeded(RingError):
    """A construction would materialize more elements than the cap allows."""


def require_cap(order: int, max_order: int) -> None:
    if order > max_order:
        raise CapExceeded(f"ring of order {order} exceeds the cap of {max_order}")


def _frozen(table, dtype=np.int32) -> np.ndarray:
    arr = np.ascontiguousarray(table, dtype=dtype)
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A unital ring given by dense element-index tables.

    ``add[a, b]`` and ``mul[a, b]`` are element indices, ``neg[a]`` is the
    additive inverse.  Instances are immutable once built; derived data such
    as the unit set or the radical is memoized on first use.  ``info`` holds
    construction metadata (component rings, digit weights, ...) used by the
    pretty-printer and the fact-checking harness.
    """

    __slots__ = ("order", "add", "neg", "mul", "zero", "one", "label", "info",
                 "namer", "_cache")

    def __init__(self, order, add, neg, mul, zero, one, label="ring",
                 namer=None, info=None):
        self.order = int(order)
        self.add = _frozen(add)
        self.neg = _frozen(neg)
        self.mul = _frozen(mul)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.namer: Callable[[int], str] | None = namer
        self.info: dict = info if info is not None else {}
        self._cache: dict = {}

    def __repr__(self):
        return f"FiniteRing({self.label!r}, order={self.order})"

    # Scalar helpers for closure-style code; bulk paths index tables directly.
    def add_i(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def sub_i(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def mul_i(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def neg_i(self, a: int) -> int:
        return int(self.neg[a])

    def pow_i(self, a: int, k: int) -> int:
        if k < 1:
            raise ValueError("exponent must be >= 1")
        acc = a
        for _ in range(k - 1):
            acc = int(self.mul[acc, a])
        return acc

    def element_name(self, a: int) -> str:
        return self.namer(a) if self.namer is not None else str(a)

    def cached(self, key: str, build: Callable):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]


class ElementSet:
    """A subset of a ring's elements with O(1) membership (bitset semantics)."""

    __slots__ = ("ring", "mask", "_indices")

    def __init__(self, ring: FiniteRing, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.order,):
            raise ValueError("mask length must equal the ring order")
        mask = mask.copy()
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        self._indices: tuple[int, ...] | None = None

    @classmethod
    def from_indices(cls, ring: FiniteRing, indices: Iterable[int]) -> "ElementSet":
        mask = np.zeros(ring.order, dtype=bool)
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= ring.order):
            raise ValueError("element index out of range")
        mask[idx] = True
        return cls(ring, mask)

    @property
    def indices(self) -> tuple[int, ...]:
        if self._indices is None:
            self._indices = tuple(int(i) for i in np.flatnonzero(self.mask))
        return self._indices

    def __contains__(self, a: int) -> bool:
        return bool(self.mask[a])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self):
        return iter(self.indices)

    def __eq__(self, other):
        return (isinstance(other, ElementSet) and self.ring is other.ring
                and bool(np.array_equal(self.mask, other.mask)))

    def __repr__(self):
        return f"ElementSet({self.ring.label!r}, {{{', '.join(map(str, self.indices[:8]))}" \
               f"{', ...' if len(self) > 8 else ''}}})"


class Ideal:
    """A two-sided ideal, carried as a verified ElementSet."""

    __slots__ = ("members",)

    def __init__(self, members: ElementSet):
        self.members = members

    @property
    def ring(self) -> FiniteRing:
        return self.members.ring

    @property
    def mask(self) -> np.ndarray:
        return self.members.mask

    @property
    def indices(self) -> tuple[int, ...]:
        return self.members.indices

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"Ideal({self.ring.label!r}, size={len(self)})"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Validation:
    """Outcome of the axiom scan: ok, or the first violated axiom + witness."""

    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None
    message: str = ""


def _first_bad(diff_mask: np.ndarray) -> tuple[int, ...]:
    pos = np.argwhere(diff_mask)[0]
    return tuple(int(x) for x in pos)


def _triple_samples(n: int, seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    trip = rng.integers(0, n, size=(3, SAMPLED_TRIPLES), dtype=np.int64)
    return trip[0], trip[1], trip[2]


def validate(R: FiniteRing, seed: int = 0) -> Validation:
    """Check every ring axiom on the tables.

    Orders up to FULL_TRIPLE_ORDER get a full triple scan for associativity
    and distributivity; larger rings get a deterministic random sample of
    SAMPLED_TRIPLES triples plus full identity/inverse/commutativity rows.
    Returns the first violated axiom together with a witness index tuple.
    """
    n = R.order
    if n < 1:
        return Validation(False, "shape", (), "order must be positive")
    for name, table, shape in (("add", R.add, (n, n)), ("mul", R.mul, (n, n)),
                               ("neg", R.neg, (n,))):
        if table.shape != shape:
            return Validation(False, "shape", (), f"{name} table has shape {table.shape}")
        if table.size and (int(table.min()) < 0 or int(table.max()) >= n):
            bad = _first_bad((table < 0) | (table >= n))
            return Validation(False, "index-range", bad,
                              f"{name} table entry out of range at {bad}")
    if not (0 <= R.zero < n and 0 <= R.one < n):
        return Validation(False, "index-range", (), "zero/one index out of range")
    if n > 1 and R.zero == R.one:
        return Validation(False, "identity-distinct", (R.zero,),
                          "zero and one coincide in a ring of order > 1")

    idx = np.arange(n, dtype=np.int64)

    diff = R.add != R.add.T
    if diff.any():
        w = _first_bad(diff)
        return Validation(False, "add-commutative", w, f"a+b != b+a at {w}")
    diff = R.add[R.zero] != idx
    if diff.any():
        w = _first_bad(diff)
        return Validation(False, "add-identity", w, f"0+a != a at {w}")
    diff = R.add[idx, R.neg] != R.zero
    if diff.any():
        w = _first_bad(diff)
        return Validation(False, "add-inverse", w, f"a+(-a) != 0 at {w}")

    full = n <= FULL_TRIPLE_ORDER
    if full:
        a = b = c = slice(None)
        lhs = R.add[R.add, :]            # (a+b)+c
        rhs = R.add[:, R.add]            # a+(b+c)
    else:
        a, b, c = _triple_samples(n, seed)
        lhs = R.add[R.add[a, b], c]
        rhs = R.add[a, R.add[b, c]]
    diff = lhs != rhs
    if diff.any():
        w = _first_bad(diff)
        if not full:
            w = (int(a[w[0]]), int(b[w[0]]), int(c[w[0]]))
        return Validation(False, "add-associative", w, f"(a+b)+c != a+(b+c) at {w}")

    diff = R.mul[R.one] != idx
    if diff.any():
        w = _first_bad(diff)
        return Validation(False, "mul-identity", w, f"1*a != a at {w}")
    diff = R.mul[:, R.one] != idx
    if diff.any():
        w = _first_bad(diff)
        return Validation(False, "mul-identity", w, f"a*1 != a at {w}")

    if full:
        pairs = (
            ("mul-associative", R.mul[R.mul, :], R.mul[:, R.mul]),
            ("distributive-left", R.mul[:, R.add], R.add[R.mul[:, :, None], R.mul[:, None, :]]),
            ("distributive-right", R.mul[R.add, :], R.add[R.mul[:, None, :], R.mul[None, :, :]]),
        )
        for axiom, lhs, rhs in pairs:
            diff = lhs != rhs
            if diff.any():
                w = _first_bad(diff)
                return Validation(False, axiom, w, f"{axiom} fails at {w}")
    else:
        checks = (
            ("mul-associative", R.mul[R.mul[a, b], c], R.mul[a, R.mul[b, c]]),
            ("distributive-left", R.mul[a, R.add[b, c]], R.add[R.mul[a, b], R.mul[a, c]]),
            ("distributive-right", R.mul[R.add[a, b], c], R.add[R.mul[a, c], R.mul[b, c]]),
        )
        for axiom, lhs, rhs in checks:
            diff = lhs != rhs
            if diff.any():
                k = int(np.argmax(diff))
                w = (int(a[k]), int(b[k]), int(c[k]))
                return Validation(False, axiom, w, f"{axiom} fails at {w}")

    return Validation(True)


def checked(R: FiniteRing) -> FiniteRing:
    """Validate a freshly constructed ring, raising RingError on failure."""
    v = validate(R)
    if not v.ok:
        raise RingError(f"{R.label}: axiom {v.axiom} violated at {v.witness}: {v.message}")
    return R


# ---------------------------------------------------------------------------
# Distinguished element sets
# ---------------------------------------------------------------------------

def _one_minus(R: FiniteRing) -> np.ndarray:
    """Vector over p of the index of 1 - p."""
    return R.cached("one_minus", lambda: R.add[R.one, R.neg])


def _unit_data(R: FiniteRing) -> tuple[ElementSet, np.ndarray]:
    def build():
        eq = R.mul == R.one
        two_sided = eq & eq.T                     # [a, b]: ab = ba = 1
        mask = two_sided.any(axis=1)
        inv = np.where(mask, two_sided.argmax(axis=1), -1).astype(np.int32)
        inv.setflags(write=False)
        return ElementSet(R, mask), inv
    return R.cached("units", build)


def units(R: FiniteRing) -> ElementSet:
    """All two-sided invertible elements; the inverse map is memoized."""
    return _unit_data(R)[0]


def unit_inverses(R: FiniteRing) -> np.ndarray:
    """Inverse table: inv[a] is a's two-sided inverse, -1 for non-units."""
    return _unit_data(R)[1]


def idempotents(R: FiniteRing) -> ElementSet:
    def build():
        idx = np.arange(R.order)
        return ElementSet(R, R.mul[idx, idx] == idx)
    return R.cached("idempotents", build)


def nilpotents(R: FiniteRing) -> ElementSet:
    # a is nilpotent iff a^m = 0 for m = 2^ceil(log2(order)) >= order.
    def build():
        p = np.arange(R.order, dtype=np.int32)
        steps = max(1, int(R.order - 1).bit_length())
        for _ in range(steps):
            p = R.mul[p, p]
        return ElementSet(R, p == R.zero)
    return R.cached("nilpotents", build)


def center(R: FiniteRing) -> ElementSet:
    def build():
        comm = R.mul == R.mul.T
        return ElementSet(R, comm.all(axis=1))
    return R.cached("center", build)


def quasi_nilpotents(R: FiniteRing) -> ElementSet:
    """Elements a such that 1 - a*x is a unit for every x commuting with a."""
    def build():
        is_unit = units(R).mask
        ok = is_unit[_one_minus(R)[R.mul]]        # ok[a, x]: 1 - a*x is a unit
        comm = R.mul == R.mul.T                   # comm[a, x]: ax = xa
        return ElementSet(R, np.all(ok | ~comm, axis=1))
    return R.cached("quasi_nilpotents", build)


def _is_ideal_mask(R: FiniteRing, mask: np.ndarray) -> bool:
    if not mask[R.zero]:
        return False
    idx = np.flatnonzero(mask)
    return (bool(mask[R.add[np.ix_(idx, idx)]].all())
            and bool(mask[R.neg[idx]].all())
            and bool(mask[R.mul[idx, :]].all())
            and bool(mask[R.mul[:, idx]].all()))


def jacobson_radical(R: FiniteRing) -> Ideal:
    """The Jacobson radical {a : 1 - x*a is a unit for every x}.

    One-sided invertibility suffices here because finite rings are
    Dedekind-finite; the result is re-verified to be a two-sided ideal with
    1 + J inside the unit set, and the function fails hard otherwise.
    """
    def build():
        is_unit = units(R).mask
        ok = is_unit[_one_minus(R)[R.mul]]        # ok[x, a]: 1 - x*a is a unit
        mask = ok.all(axis=0)
        if not _is_ideal_mask(R, mask):
            raise RingError(f"{R.label}: computed radical is not a two-sided ideal")
        j_idx = np.flatnonzero(mask)
        if not is_unit[R.add[R.one, j_idx]].all():
            raise RingError(f"{R.label}: 1 + radical escapes the unit set")
        return Ideal(ElementSet(R, mask))
    return R.cached("jacobson_radical", build)


def prime_radical(R: FiniteRing) -> Ideal:
    """The lower nil-radical.

    For a finite ring the Jacobson radical is a nilpotent ideal, hence is
    contained in every prime radical bound, and the two radicals coincide;
    this avoids enumerating prime ideals.
    """
    return jacobson_radical(R)


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest two-sided ideal containing gens (closure to a fixpoint)."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        if not 0 <= int(g) < R.order:
            raise RingError(f"generator {g} out of range for {R.label}")
        mask[int(g)] = True
    while True:
        idx = np.flatnonzero(mask)
        nxt = mask.copy()
        nxt[R.add[np.ix_(idx, idx)]] = True
        nxt[R.neg[idx]] = True
        nxt[R.mul[idx, :]] = True
        nxt[R.mul[:, idx]] = True
        if (nxt == mask).all():
            return Ideal(ElementSet(R, mask))
        mask = nxt


def additive_closure(R: FiniteRing, seed_indices: Iterable[int]) -> np.ndarray:
    """Mask of the additive subgroup generated by the given elements."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in seed_indices:
        mask[int(g)] = True
    while True:
        idx = np.flatnonzero(mask)
        nxt = mask.copy()
        nxt[R.add[np.ix_(idx, idx)]] = True
        if (nxt == mask).all():
            return mask
        mask = nxt


def is_nilpotent_ideal(R: FiniteRing, members: Iterable[int]) -> bool:
    """Whether the ideal I satisfies I^k = 0 for some k <= order."""
    cur = np.zeros(R.order, dtype=bool)
    base = np.array(sorted(set(int(g) for g in members) | {R.zero}), dtype=np.int64)
    cur[base] = True
    for _ in range(R.order):
        idx = np.flatnonzero(cur)
        if idx.size == 1 and cur[R.zero]:
            return True
        prods = np.unique(R.mul[np.ix_(idx, base)])
        nxt = additive_closure(R, prods)
        if (nxt == cur).all():
            return False
        cur = nxt
    return bool(cur.sum() == 1 and cur[R.zero])


def quotient(R: FiniteRing, I: Ideal, label: str | None = None) -> FiniteRing:
    """Coset ring R/I; cosets are indexed by their minimal representative.

    The canonical surjection is stored in ``info["projection"]`` (an array
    mapping old element indices to coset indices).
    """
    if not isinstance(I, Ideal) or I.ring is not R:
        raise RingError("quotient requires an Ideal of the same ring")
    if not _is_ideal_mask(R, I.mask):
        raise RingError(f"{R.label}: quotient input is not a two-sided ideal")
    members = np.asarray(I.indices, dtype=np.int64)
    reps = R.add[:, members].min(axis=1)
    rep_elems = np.unique(reps)
    m = rep_elems.size
    index_of = np.full(R.order, -1, dtype=np.int32)
    index_of[rep_elems] = np.arange(m, dtype=np.int32)
    projection = index_of[reps]
    add_q = projection[R.add[np.ix_(rep_elems, rep_elems)]]
    mul_q = projection[R.mul[np.ix_(rep_elems, rep_elems)]]
    neg_q = projection[R.neg[rep_elems]]
    host_name = R.element_name
    namer = lambda i: f"[{host_name(int(rep_elems[i]))}]"
    ring = FiniteRing(m, add_q, neg_q, mul_q,
                      zero=int(projection[R.zero]), one=int(projection[R.one]),
                      label=label or f"{R.label}/I{len(I)}", namer=namer,
                      info={"kind": "quotient", "host": R,
                            "projection": _frozen(projection),
                            "coset_reps": _frozen(rep_elems, dtype=np.int64)})
    return checked(ring)


def corner_ring(R: FiniteRing, e: int, label: str | None = None) -> FiniteRing:
    """The corner ring eRe for an idempotent e, with identity e.

    ``info["embedding"]`` maps new indices back to elements of R.
    """
    e = int(e)
    if not 0 <= e < R.order or R.mul_i(e, e) != e:
        raise RingError(f"{R.label}: corner element {e} is not an idempotent")
    members = np.unique(R.mul[e, R.mul[:, e]])    # e*(r*e) over all r
    return subring_ring(R, members, one=e, label=label or f"Corner({R.label}, {e})",
                        kind="corner")


def subring_ring(R: FiniteRing, members: Iterable[int], one: int | None = None,
                 label: str | None = None, kind: str = "subring") -> FiniteRing:
    """Materialize a multiplicatively/additively closed subset as a ring.

    ``one`` defaults to R.one and must lie in the subset; closure under
    addition, negation and multiplication is verified.
    """
    emb = np.unique(np.asarray(list(members), dtype=np.int64))
    if emb.size == 0 or emb.min() < 0 or emb.max() >= R.order:
        raise RingError("subring members out of range")
    sub_one = R.one if one is None else int(one)
    mask = np.zeros(R.order, dtype=bool)
    mask[emb] = True
    if not (mask[R.zero] and mask[sub_one]):
        raise RingError(f"{R.label}: subset misses 0 or its identity")
    if not (mask[R.add[np.ix_(emb, emb)]].all() and mask[R.neg[emb]].all()
            and mask[R.mul[np.ix_(emb, emb)]].all()):
        raise RingError(f"{R.label}: subset is not closed under the ring operations")
    index_of = np.full(R.order, -1, dtype=np.int32)
    index_of[emb] = np.arange(emb.size, dtype=np.int32)
    host_name = R.element_name
    namer = lambda i: host_name(int(emb[i]))
    ring = FiniteRing(emb.size,
                      index_of[R.add[np.ix_(emb, emb)]],
                      index_of[R.neg[emb]],
                      index_of[R.mul[np.ix_(emb, emb)]],
                      zero=int(index_of[R.zero]), one=int(index_of[sub_one]),
                      label=label or f"Sub({R.label}, {emb.size})", namer=namer,
                      info={"kind": kind, "host": R,
                            "embedding": _frozen(emb, dtype=np.int64)})
    return checked(ring)


def is_good_subring(R: FiniteRing, members: Iterable[int]) -> bool:
    """Whether every member invertible in R has its inverse in the subset.

    The subset must be a unital subring of R (same 0 and 1); anything else
    is rejected with a RingError.
    """
    emb = np.unique(np.asarray(list(members), dtype=np.int64))
    mask = np.zeros(R.order, dtype=bool)
    if emb.size:
        if emb.min() < 0 or emb.max() >= R.order:
            raise RingError("subring members out of range")
        mask[emb] = True
    if not (mask[R.zero] and mask[R.one]):
        raise RingError(f"{R.label}: subset misses 0 or 1")
    if not (mask[R.add[np.ix_(emb, emb)]].all() and mask[R.neg[emb]].all()
            and mask[R.mul[np.ix_(emb, emb)]].all()):
        raise RingError(f"{R.label}: subset is not a subring")
    inv = unit_inverses(R)
    inside_units = emb[units(R).mask[emb]]
    return bool(mask[inv[inside_units]].all())


def embed_int(R: FiniteRing, k: int) -> int:
    """The element k*1 of R (k >= 0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    acc, addend = R.zero, R.one
    while k:
        if k & 1:
            acc = int(R.add[acc, addend])
        addend = int(R.add[addend, addend])
        k >>= 1
    return acc


def characteristic(R: FiniteRing) -> int:
    """Additive order of 1."""
    def build():
        k, cur = 1, R.one
        while cur != R.zero:
            cur = int(R.add[cur, R.one])
            k += 1
        return k
    return R.cached("characteristic", build)


def mod_radical(R: FiniteRing) -> FiniteRing:
    """R modulo its Jacobson radical (memoized)."""
    return R.cached("mod_radical",
                    lambda: quotient(R, jacobson_radical(R), label=f"{R.label}/J"))
