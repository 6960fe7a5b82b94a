"""Builders for the ring and group families the toolkit analyzes.

Composite rings (products, matrix/triangular rings, trivial extensions,
truncated polynomial rings, group rings, Morita context rings) all share one
table compiler: elements are digit tuples over component additive groups,
addition is componentwise, and multiplication is described by a bilinear
recipe saying which digit pairs feed each output digit through which pairing
table.  The compiler materializes dense tables chunk by chunk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .core import (DEFAULT_MAX_ORDER, ElementSet, FiniteRing, Ideal, RingError,
                   _frozen, _is_ideal_mask, additive_closure, checked,
                   is_nilpotent_ideal, require_cap, units)

_CHUNK_CELLS = 1 << 22


# ---------------------------------------------------------------------------
# Additive components and groups
# ---------------------------------------------------------------------------

@dataclass
class AbelianGroup:
    """A finite abelian group given by add/neg tables (module carrier)."""

    order: int
    add: np.ndarray
    neg: np.ndarray
    zero: int = 0
    label: str = "A"
    names: Sequence[str] | None = None

    def __post_init__(self):
        self.add = _frozen(self.add)
        self.neg = _frozen(self.neg)

    def element_name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


def abelian_of(R: FiniteRing) -> AbelianGroup:
    """The additive group underlying a ring (for use as a bimodule carrier)."""
    return AbelianGroup(R.order, R.add, R.neg, R.zero, label=R.label,
                        names=[R.element_name(i) for i in range(R.order)])


def zero_module() -> AbelianGroup:
    return AbelianGroup(1, [[0]], [0], 0, label="0", names=["0"])


class FiniteGroup:
    """A finite group given by a Cayley table on {0, ..., order-1}."""

    __slots__ = ("order", "cayley", "identity", "label", "names")

    def __init__(self, order, cayley, identity, label, names=None):
        self.order = int(order)
        self.cayley = _frozen(cayley)
        self.identity = int(identity)
        self.label = label
        self.names = list(names) if names else [str(i) for i in range(self.order)]

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def op(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def element_name(self, g: int) -> str:
        return self.names[g]


def validate_group(G: FiniteGroup) -> None:
    n, t = G.order, G.cayley
    if t.shape != (n, n):
        raise RingError(f"{G.label}: Cayley table has shape {t.shape}")
    if t.size and (int(t.min()) < 0 or int(t.max()) >= n):
        raise RingError(f"{G.label}: Cayley entry out of range")
    idx = np.arange(n)
    e = G.identity
    if (t[e] != idx).any() or (t[:, e] != idx).any():
        raise RingError(f"{G.label}: identity law fails")
    eq = t == e
    if not (eq & eq.T).any(axis=1).all():
        raise RingError(f"{G.label}: some element has no two-sided inverse")
    if n <= 64:
        if (t[t, :] != t[:, t]).any():
            raise RingError(f"{G.label}: associativity fails")
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, 100_000))
        if (t[t[a, b], c] != t[a, t[b, c]]).any():
            raise RingError(f"{G.label}: associativity fails")


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise RingError("cyclic group order must be >= 1")
    v = np.arange(n, dtype=np.int64)
    names = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    G = FiniteGroup(n, (v[:, None] + v[None, :]) % n, 0, f"C({n})", names)
    validate_group(G)
    return G


def group_product(Gs: Sequence[FiniteGroup], label: str | None = None) -> FiniteGroup:
    sizes = [G.order for G in Gs]
    n = math.prod(sizes)
    weights = [math.prod(sizes[t + 1:]) for t in range(len(Gs))]
    idx = np.arange(n, dtype=np.int64)
    digits = [(idx // w) % s for w, s in zip(weights, sizes)]
    table = sum(Gs[t].cayley[digits[t][:, None], digits[t][None, :]].astype(np.int64) * weights[t]
                for t in range(len(Gs)))
    identity = sum(G.identity * w for G, w in zip(Gs, weights))
    names = []
    for i in range(n):
        parts = [Gs[t].element_name(int(digits[t][i])) for t in range(len(Gs))]
        names.append("(" + ", ".join(parts) + ")")
    G = FiniteGroup(n, table, identity,
                    label or f"GProd({', '.join(g.label for g in Gs)})", names)
    validate_group(G)
    return G


def _symmetric3() -> FiniteGroup:
    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    names = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(6, table, 0, "S3", names)


def _dihedral4() -> FiniteGroup:
    # indices 0-3: rotations r^i, 4-7: reflections s*r^i
    table = [[0] * 8 for _ in range(8)]
    for i in range(4):
        for j in range(4):
            table[i][j] = (i + j) % 4
            table[i][j + 4] = 4 + (i + j) % 4
            table[i + 4][j] = 4 + (i - j) % 4
            table[i + 4][j + 4] = (i - j) % 4
    names = [f"r{i}" for i in range(4)] + [f"s{i}" for i in range(4)]
    return FiniteGroup(8, table, 0, "D4", names)


def _quaternion8() -> FiniteGroup:
    # index = axis*2 + sign with axes (1, i, j, k), sign 0 = +, 1 = -
    ax = {(0, x): (x, 0) for x in range(4)}
    ax.update({(x, 0): (x, 0) for x in range(4)})
    ax.update({(1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
               (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
               (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1)})
    table = [[0] * 8 for _ in range(8)]
    for a in range(4):
        for s in range(2):
            for b in range(4):
                for t in range(2):
                    axis, sign = ax[(a, b)]
                    table[a * 2 + s][b * 2 + t] = axis * 2 + (s ^ t ^ sign)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(8, table, 0, "Q8", names)


def _klein4() -> FiniteGroup:
    G = group_product([cyclic_group(2), cyclic_group(2)], label="Klein")
    return FiniteGroup(4, G.cayley, 0, "Klein", ["e", "a", "b", "ab"])


_BUILTIN_GROUPS = {"S3": _symmetric3, "D4": _dihedral4, "Q8": _quaternion8,
                   "Klein": _klein4}


def builtin_group(name: str) -> FiniteGroup:
    if name not in _BUILTIN_GROUPS:
        raise RingError(f"unknown group {name!r}; known: {sorted(_BUILTIN_GROUPS)}")
    G = _BUILTIN_GROUPS[name]()
    validate_group(G)
    return G


def element_order(G: FiniteGroup, g: int) -> int:
    k, cur = 1, g
    while cur != G.identity:
        cur = G.op(cur, g)
        k += 1
    return k


def group_exponent(G: FiniteGroup) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*(element_order(G, g) for g in range(G.order)))


def is_p_group(G: FiniteGroup, p: int) -> bool:
    """Order is a power of p and every element order is a power of p."""
    n = G.order
    while n % p == 0:
        n //= p
    if n != 1:
        return False
    for g in range(G.order):
        k = element_order(G, g)
        while k % p == 0:
            k //= p
        if k != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# The tuple-ring compiler
# ---------------------------------------------------------------------------

def _compile_tuple_ring(parts, recipe, one_digits, label, fmt, max_order,
                        kind, extra_info=None):
    """Build a ring of digit tuples over additive components.

    ``recipe[t]`` lists (i, j, table) terms: output digit t is the component-t
    sum of table[left_digit_i, right_digit_j] over all terms.
    """
    sizes = [p.order for p in parts]
    d = len(parts)
    n = math.prod(sizes)
    require_cap(n, max_order)

    weights = [0] * d
    w = 1
    for t in reversed(range(d)):
        weights[t] = w
        w *= sizes[t]

    idx = np.arange(n, dtype=np.int64)
    digits = np.empty((n, d), dtype=np.int32)
    for t in range(d):
        digits[:, t] = (idx // weights[t]) % sizes[t]

    neg = np.zeros(n, dtype=np.int64)
    for t in range(d):
        neg += parts[t].neg[digits[:, t]].astype(np.int64) * weights[t]

    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    step = max(1, _CHUNK_CELLS // n)
    for r0 in range(0, n, step):
        rows = slice(r0, min(n, r0 + step))
        nrows = rows.stop - rows.start
        acc = np.zeros((nrows, n), dtype=np.int64)
        for t in range(d):
            acc += parts[t].add[digits[rows, t][:, None],
                                digits[:, t][None, :]].astype(np.int64) * weights[t]
        add[rows] = acc
        acc.fill(0)
        for t in range(d):
            dt = None
            for (i, j, table) in recipe.get(t, ()):
                v = table[digits[rows, i][:, None], digits[:, j][None, :]]
                dt = v if dt is None else parts[t].add[dt, v]
            if dt is None:
                if parts[t].zero:
                    acc += parts[t].zero * weights[t]
            else:
                acc += dt.astype(np.int64) * weights[t]
        mul[rows] = acc

    zero = sum(parts[t].zero * weights[t] for t in range(d))
    one = sum(int(one_digits[t]) * weights[t] for t in range(d))

    part_namers = [p.element_name for p in parts]

    def namer(i: int) -> str:
        digs = digits[i]
        return fmt([part_namers[t](int(digs[t])) for t in range(d)], digs)

    info = {"kind": kind, "sizes": tuple(sizes), "weights": tuple(weights),
            "digits": _frozen(digits)}
    if extra_info:
        info.update(extra_info)
    return checked(FiniteRing(n, add, neg, mul, zero, one, label=label,
                              namer=namer, info=info))


# ---------------------------------------------------------------------------
# Ring builders
# ---------------------------------------------------------------------------

def zmod(m: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Integers modulo m (m = 1 gives the zero ring)."""
    if m < 1:
        raise RingError("modulus must be >= 1")
    require_cap(m, max_order)
    v = np.arange(m, dtype=np.int32)
    ring = FiniteRing(m, (v[:, None] + v[None, :]) % m, (-v) % m,
                      (v[:, None].astype(np.int64) * v[None, :]) % m,
                      0, 1 % m, label=f"Z({m})", namer=lambda i: str(i),
                      info={"kind": "zmod", "m": m})
    return checked(ring)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


def _poly_divides(div, num, p):
    """Whether monic div divides num over Z_p (little-endian coefficients)."""
    rem = list(num)
    dd = len(div) - 1
    while len(rem) - 1 >= dd:
        lead = rem[-1]
        if lead:
            for k in range(dd + 1):
                rem[len(rem) - 1 - dd + k] = (rem[len(rem) - 1 - dd + k] - lead * div[k]) % p
        rem.pop()
    return all(c == 0 for c in rem)


def _smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k over Z_p.

    Candidates x^k + c are enumerated by the base-p value of the tail c;
    irreducibility is decided by trial division by all lower-degree monics.
    """
    for tail_value in range(p ** k):
        tail = [(tail_value // p ** i) % p for i in range(k)]
        if tail[0] == 0:
            continue  # reducible: divisible by x
        cand = tail + [1]
        reducible = False
        for ddeg in range(1, k // 2 + 1):
            for dval in range(p ** ddeg):
                div = [(dval // p ** i) % p for i in range(ddeg)] + [1]
                if _poly_divides(div, cand, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return cand
    raise RingError(f"no irreducible of degree {k} over Z_{p}")  # unreachable


def _poly_term(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    x = "x" if e == 1 else f"x^{e}"
    return x if c == 1 else f"{c}{x}"


def finite_field(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The field GF(p^k) as Z_p[x] modulo the smallest monic irreducible.

    Element i encodes the polynomial with base-p digits of i as coefficients
    (constant digit least significant), so scalars sit at indices 0..p-1.
    """
    if not is_prime(p):
        raise RingError(f"{p} is not prime")
    if k < 1:
        raise RingError("field degree must be >= 1")
    n = p ** k
    require_cap(n, max_order)
    label = f"GF({p}, {k})"
    if k == 1:
        base = zmod(p, max_order)
        ring = FiniteRing(p, base.add, base.neg, base.mul, 0, 1, label=label,
                          namer=lambda i: str(i),
                          info={"kind": "field", "p": p, "k": k, "modulus": [0, 1]})
        return checked(ring)

    modulus = _smallest_irreducible(p, k)
    # red[m] = x^m reduced mod the modulus, little-endian, for m = k .. 2k-2
    red = {k: [(-modulus[i]) % p for i in range(k)]}
    for m in range(k + 1, 2 * k - 1):
        prev = red[m - 1]
        shifted = [0] + prev[:-1]
        carry = prev[-1]
        red[m] = [(shifted[i] + carry * red[k][i]) % p for i in range(k)]

    base = zmod(p, max_order)
    vv = np.arange(p, dtype=np.int64)
    scaled = {c: _frozen((vv[:, None] * vv[None, :] * c) % p) for c in range(1, p)}

    # digit t carries the coefficient of x^(k-1-t)
    recipe: dict[int, list] = {t: [] for t in range(k)}
    for i in range(k):
        for j in range(k):
            m = (k - 1 - i) + (k - 1 - j)
            if m < k:
                recipe[k - 1 - m].append((i, j, base.mul))
            else:
                for e in range(k):
                    c = red[m][e]
                    if c:
                        recipe[k - 1 - e].append((i, j, scaled[c]))

    def fmt(names, digs):
        terms = [_poly_term(int(digs[t]), k - 1 - t) for t in range(k) if digs[t]]
        return " + ".join(terms) if terms else "0"

    one_digits = [0] * (k - 1) + [1]
    ring = _compile_tuple_ring([base] * k, recipe, one_digits, label, fmt,
                               max_order, kind="field",
                               extra_info={"p": p, "k": k, "modulus": modulus})
    if len(units(ring)) != n - 1:
        raise RingError(f"{label}: some nonzero element is not invertible")
    return ring


def direct_product(rings: Sequence[FiniteRing],
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Componentwise product; element index is the mixed-radix digit tuple."""
    if not rings:
        raise RingError("product needs at least one factor")
    recipe = {t: [(t, t, rings[t].mul)] for t in range(len(rings))}
    fmt = lambda names, digs: "(" + ", ".join(names) + ")"
    return _compile_tuple_ring(list(rings), recipe, [r.one for r in rings],
                               f"Prod({', '.join(r.label for r in rings)})",
                               fmt, max_order, kind="product",
                               extra_info={"parts": tuple(rings)})


def matrix_ring(n: int, R: FiniteRing, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Full n x n matrices over R, row-major digit encoding."""
    if n < 1:
        raise RingError("matrix size must be >= 1")
    pos = lambda i, j: i * n + j
    recipe = {pos(i, j): [(pos(i, k), pos(k, j), R.mul) for k in range(n)]
              for i in range(n) for j in range(n)}
    one_digits = [R.one if i == j else R.zero for i in range(n) for j in range(n)]

    def fmt(names, digs):
        rows = ["[" + ", ".join(names[i * n:(i + 1) * n]) + "]" for i in range(n)]
        return "[" + ", ".join(rows) + "]"

    return _compile_tuple_ring([R] * (n * n), recipe, one_digits,
                               f"M({n}, {R.label})", fmt, max_order,
                               kind="matrix", extra_info={"base": R, "n": n})


def upper_triangular(n: int, R: FiniteRing,
                     max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Upper triangular n x n matrices over R."""
    if n < 1:
        raise RingError("matrix size must be >= 1")
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {ij: t for t, ij in enumerate(positions)}
    recipe = {pos[(i, j)]: [(pos[(i, k)], pos[(k, j)], R.mul) for k in range(i, j + 1)]
              for (i, j) in positions}
    one_digits = [R.one if i == j else R.zero for (i, j) in positions]
    zname = R.element_name(R.zero)

    def fmt(names, digs):
        rows = []
        for i in range(n):
            row = [names[pos[(i, j)]] if j >= i else zname for j in range(n)]
            rows.append("[" + ", ".join(row) + "]")
        return "[" + ", ".join(rows) + "]"

    return _compile_tuple_ring([R] * len(positions), recipe, one_digits,
                               f"T({n}, {R.label})", fmt, max_order,
                               kind="triangular",
                               extra_info={"base": R, "n": n, "positions": positions})


def trivial_extension(R: FiniteRing, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Pairs (r, m) over R with (r, m)(s, n) = (rs, rn + ms)."""
    recipe = {0: [(0, 0, R.mul)], 1: [(0, 1, R.mul), (1, 0, R.mul)]}
    fmt = lambda names, digs: f"({names[0]}, {names[1]})"
    return _compile_tuple_ring([R, R], recipe, [R.one, R.zero],
                               f"TrivExt({R.label})", fmt, max_order,
                               kind="trivext", extra_info={"base": R})


def truncated_poly(R: FiniteRing, n: int,
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Polynomials over R truncated at degree n (x^n = 0); digit t is the
    coefficient of x^t.  For n = 2 the tables coincide with the trivial
    extension's under the shared digit encoding."""
    if n < 1:
        raise RingError("truncation degree must be >= 1")
    recipe = {t: [(i, t - i, R.mul) for i in range(t + 1)] for t in range(n)}

    def fmt(names, digs):
        terms = [_poly_term_named(names[t], int(digs[t]), t, R) for t in range(n) if digs[t]]
        return " + ".join(terms) if terms else R.element_name(R.zero)

    one_digits = [R.one] + [R.zero] * (n - 1)
    return _compile_tuple_ring([R] * n, recipe, one_digits,
                               f"PolyMod({R.label}, {n})", fmt, max_order,
                               kind="polymod", extra_info={"base": R, "n": n})


def _poly_term_named(name: str, dig: int, e: int, R: FiniteRing) -> str:
    if e == 0:
        return name
    x = "x" if e == 1 else f"x^{e}"
    return x if dig == R.one else f"{name}*{x}"


def group_ring(R: FiniteRing, G: FiniteGroup,
               max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The group ring of G over R: functions G -> R under convolution.

    The coefficient-sum map and its kernel (the augmentation ideal) are
    attached to ``info`` as "augmentation" and "delta".
    """
    require_cap(R.order ** G.order, max_order)
    cayley = G.cayley
    recipe: dict[int, list] = {t: [] for t in range(G.order)}
    for g in range(G.order):
        for h in range(G.order):
            recipe[int(cayley[g, h])].append((g, h, R.mul))
    one_digits = [R.one if g == G.identity else R.zero for g in range(G.order)]

    def fmt(names, digs):
        terms = [f"{names[g]}*{G.element_name(g)}" for g in range(G.order) if digs[g] != R.zero]
        return " + ".join(terms) if terms else R.element_name(R.zero)

    ring = _compile_tuple_ring([R] * G.order, recipe, one_digits,
                               f"GroupRing({R.label}, {G.label})", fmt, max_order,
                               kind="groupring", extra_info={"base": R, "group": G})
    digits = ring.info["digits"]
    eps = digits[:, 0].copy()
    for g in range(1, G.order):
        eps = R.add[eps, digits[:, g]]
    delta_mask = eps == R.zero
    if not _is_ideal_mask(ring, delta_mask):
        raise RingError(f"{ring.label}: augmentation kernel is not an ideal")
    ring.info["augmentation"] = _frozen(eps)
    ring.info["delta"] = Ideal(ElementSet(ring, delta_mask))
    return ring


def augmentation_map(RG: FiniteRing) -> np.ndarray:
    if RG.info.get("kind") != "groupring":
        raise RingError("not a group ring")
    return RG.info["augmentation"]


def augmentation_ideal(RG: FiniteRing) -> Ideal:
    if RG.info.get("kind") != "groupring":
        raise RingError("not a group ring")
    return RG.info["delta"]


# ---------------------------------------------------------------------------
# Morita context rings
# ---------------------------------------------------------------------------

@dataclass
class BimodulePairing:
    """Data for a 2x2 generalized matrix ring over rings A and B.

    M is an (A, B)-bimodule, N a (B, A)-bimodule, both as table-backed
    abelian groups with action tables; phi: M x N -> A and psi: N x M -> B
    are the context pairings.
    """

    A: FiniteRing
    B: FiniteRing
    M: AbelianGroup
    N: AbelianGroup
    am: np.ndarray  # A x M -> M
    mb: np.ndarray  # M x B -> M
    bn: np.ndarray  # B x N -> N
    na: np.ndarray  # N x A -> N
    phi: np.ndarray  # M x N -> A
    psi: np.ndarray  # N x M -> B

    def __post_init__(self):
        for name in ("am", "mb", "bn", "na", "phi", "psi"):
            setattr(self, name, _frozen(getattr(self, name)))


def _check_additive_map(add_out, table, left_add, right_add, what):
    """table(x + x', y) = table(x, y) + table(x', y), and symmetrically."""
    ln, rn = table.shape
    for x1 in range(ln):
        for x2 in range(ln):
            xs = int(left_add[x1, x2])
            for y in range(rn):
                if int(table[xs, y]) != int(add_out[table[x1, y], table[x2, y]]):
                    raise RingError(f"{what} is not additive in its left argument")
    for y1 in range(rn):
        for y2 in range(rn):
            ys = int(right_add[y1, y2])
            for x in range(ln):
                if int(table[x, ys]) != int(add_out[table[x, y1], table[x, y2]]):
                    raise RingError(f"{what} is not additive in its right argument")


def validate_context(ctx: BimodulePairing) -> None:
    """Check module laws, bilinearity, balance, and mixed associativity."""
    A, B, M, N = ctx.A, ctx.B, ctx.M, ctx.N
    _check_additive_map(M.add, ctx.am, A.add, M.add, "A-action on M")
    _check_additive_map(M.add, ctx.mb, M.add, B.add, "B-action on M")
    _check_additive_map(N.add, ctx.bn, B.add, N.add, "B-action on N")
    _check_additive_map(N.add, ctx.na, N.add, A.add, "A-action on N")
    _check_additive_map(A.add, ctx.phi, M.add, N.add, "phi")
    _check_additive_map(B.add, ctx.psi, N.add, M.add, "psi")

    for m in range(M.order):
        if int(ctx.am[A.one, m]) != m or int(ctx.mb[m, B.one]) != m:
            raise RingError("module identities fail on M")
    for n_ in range(N.order):
        if int(ctx.bn[B.one, n_]) != n_ or int(ctx.na[n_, A.one]) != n_:
            raise RingError("module identities fail on N")

    for a1 in range(A.order):
        for a2 in range(A.order):
            for m in range(M.order):
                if int(ctx.am[A.mul[a1, a2], m]) != int(ctx.am[a1, ctx.am[a2, m]]):
                    raise RingError("A-action on M is not associative")
    for m in range(M.order):
        for b1 in range(B.order):
            for b2 in range(B.order):
                if int(ctx.mb[m, B.mul[b1, b2]]) != int(ctx.mb[ctx.mb[m, b1], b2]):
                    raise RingError("B-action on M is not associative")
    for a in range(A.order):
        for m in range(M.order):
            for b in range(B.order):
                if int(ctx.mb[ctx.am[a, m], b]) != int(ctx.am[a, ctx.mb[m, b]]):
                    raise RingError("M actions do not commute")
    for b1 in range(B.order):
        for b2 in range(B.order):
            for n_ in range(N.order):
                if int(ctx.bn[B.mul[b1, b2], n_]) != int(ctx.bn[b1, ctx.bn[b2, n_]]):
                    raise RingError("B-action on N is not associative")
    for n_ in range(N.order):
        for a1 in range(A.order):
            for a2 in range(A.order):
                if int(ctx.na[n_, A.mul[a1, a2]]) != int(ctx.na[ctx.na[n_, a1], a2]):
                    raise RingError("A-action on N is not associative")
    for b in range(B.order):
        for n_ in range(N.order):
            for a in range(A.order):
                if int(ctx.na[ctx.bn[b, n_], a]) != int(ctx.bn[b, ctx.na[n_, a]]):
                    raise RingError("N actions do not commute")

    for a in range(A.order):
        for m in range(M.order):
            for n_ in range(N.order):
                if int(ctx.phi[ctx.am[a, m], n_]) != int(A.mul[a, ctx.phi[m, n_]]):
                    raise RingError("phi is not left A-linear")
                if int(ctx.phi[m, ctx.na[n_, a]]) != int(A.mul[ctx.phi[m, n_], a]):
                    raise RingError("phi is not right A-linear")
    for m in range(M.order):
        for b in range(B.order):
            for n_ in range(N.order):
                if int(ctx.phi[ctx.mb[m, b], n_]) != int(ctx.phi[m, ctx.bn[b, n_]]):
                    raise RingError("phi is not B-balanced")
    for b in range(B.order):
        for n_ in range(N.order):
            for m in range(M.order):
                if int(ctx.psi[ctx.bn[b, n_], m]) != int(B.mul[b, ctx.psi[n_, m]]):
                    raise RingError("psi is not left B-linear")
                if int(ctx.psi[n_, ctx.mb[m, b]]) != int(B.mul[ctx.psi[n_, m], b]):
                    raise RingError("psi is not right B-linear")
    for n_ in range(N.order):
        for a in range(A.order):
            for m in range(M.order):
                if int(ctx.psi[ctx.na[n_, a], m]) != int(ctx.psi[n_, ctx.am[a, m]]):
                    raise RingError("psi is not A-balanced")

    # mixed associativity: (m n) m' = m (n m') and (n m) n' = n (m n')
    for m in range(M.order):
        for n_ in range(N.order):
            for m2 in range(M.order):
                if int(ctx.am[ctx.phi[m, n_], m2]) != int(ctx.mb[m, ctx.psi[n_, m2]]):
                    raise RingError("mixed associativity fails on M")
    for n_ in range(N.order):
        for m in range(M.order):
            for n2 in range(N.order):
                if int(ctx.bn[ctx.psi[n_, m], n2]) != int(ctx.na[n_, ctx.phi[m, n2]]):
                    raise RingError("mixed associativity fails on N")


def morita_ring(ctx: BimodulePairing, max_order: int = DEFAULT_MAX_ORDER,
                label: str | None = None) -> FiniteRing:
    """The 2x2 generalized matrix ring of a bimodule pairing.

    ``info`` records the corner rings and whether the two trace ideals
    (the additive spans of the pairing images) are nilpotent and central.
    """
    validate_context(ctx)
    A, B, M, N = ctx.A, ctx.B, ctx.M, ctx.N
    recipe = {
        0: [(0, 0, A.mul), (1, 2, ctx.phi)],
        1: [(0, 1, ctx.am), (1, 3, ctx.mb)],
        2: [(2, 0, ctx.na), (3, 2, ctx.bn)],
        3: [(2, 1, ctx.psi), (3, 3, B.mul)],
    }
    fmt = lambda names, digs: f"[{names[0]} {names[1]}; {names[2]} {names[3]}]"
    ring = _compile_tuple_ring(
        [A, M, N, B], recipe, [A.one, M.zero, N.zero, B.one],
        label or f"Morita({A.label}, {B.label}, |M|={M.order}, |N|={N.order})",
        fmt, max_order, kind="morita", extra_info={"corners": (A, B), "context": ctx})

    trace_a = additive_closure(A, (int(x) for x in np.unique(ctx.phi)))
    trace_b = additive_closure(B, (int(x) for x in np.unique(ctx.psi)))
    for host, mask, what in ((A, trace_a, "MN"), (B, trace_b, "NM")):
        if not _is_ideal_mask(host, mask):
            raise RingError(f"trace ideal {what} is not an ideal")
    from .core import center as _center
    ring.info["trace_central"] = bool(
        (~trace_a | _center(A).mask).all() and (~trace_b | _center(B).mask).all())
    ring.info["trace_nilpotent"] = bool(
        is_nilpotent_ideal(A, np.flatnonzero(trace_a))
        and is_nilpotent_ideal(B, np.flatnonzero(trace_b)))
    return ring


def _zero_table(ln: int, rn: int, value: int = 0) -> np.ndarray:
    return np.full((ln, rn), value, dtype=np.int32)


def formal_triangular(A: FiniteRing, B: FiniteRing, M: AbelianGroup,
                      am: np.ndarray, mb: np.ndarray,
                      max_order: int = DEFAULT_MAX_ORDER,
                      label: str | None = None) -> FiniteRing:
    """The formal triangular matrix ring with corners A, B and upper module M
    (a Morita context with the lower module and both pairings zero)."""
    N = zero_module()
    ctx = BimodulePairing(
        A, B, M, N,
        am=am, mb=mb,
        bn=_zero_table(B.order, 1), na=_zero_table(1, A.order),
        phi=_zero_table(M.order, 1, A.zero), psi=_zero_table(1, M.order, B.zero))
    return morita_ring(ctx, max_order,
                       label=label or f"Tri({A.label}, {B.label}, |M|={M.order})")
