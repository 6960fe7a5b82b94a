"""Membership predicates for the classes of finite rings under study.

Every predicate is a definitional brute-force scan over the tables; nothing
is inferred from structure theory, so the general facts the harness checks
(for instance that finite rings are always clean and exchange) are genuinely
re-verified on every ring.  ``classify`` aggregates all flags into a report
and asserts the implication lattice between them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (FiniteRing, RingError, _one_minus, center, idempotents,
                   jacobson_radical, mod_radical, nilpotents, quasi_nilpotents,
                   units)

_CHUNK_CELLS = 1 << 22

FLAG_ORDER = (
    "UU", "UJ", "UQ", "2-UU", "2-UJ", "2-UQ",
    "clean", "exchange", "semi-regular",
    "regular", "strongly-regular", "unit-regular",
    "pi-regular", "strongly-pi-regular",
    "tripotent", "semi-tripotent", "boolean", "reduced", "abelian",
    "local", "semisimple", "semi-potent", "potent",
    "dedekind-finite", "2-primal",
)

CARDINALITY_KEYS = ("U", "Id", "Nil", "C", "QN", "J", "Nil*")

_KIND_ALIASES = {"2UU": "2-UU", "2UJ": "2-UJ", "2UQ": "2-UQ"}
UNIT_KINDS = ("UU", "UJ", "UQ", "2-UU", "2-UJ", "2-UQ")

# Implications that must hold on every ring; a violation is a core bug.
_IMPLICATIONS = (
    ("UJ", "2-UJ"), ("UU", "2-UU"), ("UQ", "2-UQ"),
    ("2-UJ", "2-UQ"), ("2-UU", "2-UQ"), ("UJ", "UQ"), ("UU", "UQ"),
    ("boolean", "tripotent"), ("boolean", "reduced"),
    ("tripotent", "strongly-regular"),
    ("strongly-regular", "unit-regular"), ("unit-regular", "regular"),
    ("regular", "pi-regular"), ("regular", "semi-regular"),
    ("strongly-regular", "strongly-pi-regular"),
    ("strongly-pi-regular", "pi-regular"),
    ("clean", "exchange"), ("semi-regular", "exchange"),
)


def canonical_kind(kind: str) -> str:
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in UNIT_KINDS:
        raise ValueError(f"unknown unit property {kind!r}; expected one of {UNIT_KINDS}")
    return kind


def _row_chunks(n: int, width: int):
    step = max(1, _CHUNK_CELLS // max(1, width))
    for r0 in range(0, n, step):
        yield np.arange(r0, min(n, r0 + step), dtype=np.int64)


def unit_property(R: FiniteRing, kind: str) -> tuple[bool, int | None]:
    """Whether u - 1 (or u^2 - 1 for the squared kinds) lies in Nil/J/QN for
    every unit u; on failure returns the smallest failing unit as witness."""
    kind = canonical_kind(kind)
    smask = {"UU": nilpotents(R).mask, "UJ": jacobson_radical(R).mask,
             "UQ": quasi_nilpotents(R).mask}[kind[-2:]]
    u = np.asarray(units(R).indices, dtype=np.int64)
    t = R.mul[u, u] if kind.startswith("2-") else u
    ok = smask[R.add[t, R.neg[R.one]]]
    if ok.all():
        return True, None
    return False, int(u[int(np.argmax(~ok))])


def is_2uq_strong_form(R: FiniteRing) -> bool:
    """For every unit u, search an idempotent e and quasi-nilpotent q with
    eq = qe and u^2 = e + q.  Exists to measure, on whole corpora, whether
    this agrees with the plain u^2 in 1 + QN form."""
    qn = quasi_nilpotents(R).mask
    ids = np.asarray(idempotents(R).indices, dtype=np.int64)
    for u in units(R).indices:
        sq = int(R.mul[u, u])
        q = R.add[sq, R.neg[ids]]
        good = qn[q] & (R.mul[ids, q] == R.mul[q, ids])
        if not good.any():
            return False
    return True


def _clean(R: FiniteRing):
    ids = np.asarray(idempotents(R).indices, dtype=np.int64)
    umask = units(R).mask
    for rows in _row_chunks(R.order, ids.size):
        diff = R.add[rows[:, None], R.neg[ids][None, :]]
        ok = umask[diff].any(axis=1)
        if not ok.all():
            return False, [int(rows[int(np.argmax(~ok))])]
    return True, []


def _exchange(R: FiniteRing):
    n = R.order
    ids_mask = idempotents(R).mask
    om = _one_minus(R)
    for a in range(n):
        in_aR = np.zeros(n, dtype=bool)
        in_aR[R.mul[a]] = True
        cand = np.flatnonzero(in_aR & ids_mask)
        in_caR = np.zeros(n, dtype=bool)
        in_caR[R.mul[om[a]]] = True
        if not in_caR[om[cand]].any():
            return False, [a]
    return True, []


def _lifts_mod_radical(R: FiniteRing) -> bool:
    def build():
        RJ = mod_radical(R)
        proj = RJ.info["projection"]
        lifted = np.zeros(RJ.order, dtype=bool)
        lifted[proj[np.asarray(idempotents(R).indices, dtype=np.int64)]] = True
        return bool(lifted[np.asarray(idempotents(RJ).indices, dtype=np.int64)].all())
    return R.cached("idempotents_lift", build)


def _regular(R: FiniteRing):
    for rows in _row_chunks(R.order, R.order):
        prod = R.mul[R.mul[rows, :], rows[:, None]]
        ok = (prod == rows[:, None]).any(axis=1)
        if not ok.all():
            return False, [int(rows[int(np.argmax(~ok))])]
    return True, []


def _strongly_regular(R: FiniteRing):
    idx = np.arange(R.order, dtype=np.int64)
    sq = R.mul[idx, idx]
    for rows in _row_chunks(R.order, R.order):
        ok = (R.mul[sq[rows], :] == rows[:, None]).any(axis=1)
        if not ok.all():
            return False, [int(rows[int(np.argmax(~ok))])]
    return True, []


def _unit_regular(R: FiniteRing):
    us = np.asarray(units(R).indices, dtype=np.int64)
    for rows in _row_chunks(R.order, us.size):
        prod = R.mul[R.mul[rows[:, None], us[None, :]], rows[:, None]]
        ok = (prod == rows[:, None]).any(axis=1)
        if not ok.all():
            return False, [int(rows[int(np.argmax(~ok))])]
    return True, []


def _pi_regular(R: FiniteRing):
    # powers of a cycle within |R| steps, so the exponent search stops at the
    # first revisited power
    M = R.mul
    for a in range(R.order):
        p, seen, ok = a, set(), False
        while p not in seen:
            seen.add(p)
            if (M[M[p], p] == p).any():
                ok = True
                break
            p = int(M[p, a])
        if not ok:
            return False, [a]
    return True, []


def _strongly_pi_regular(R: FiniteRing):
    M = R.mul
    for a in range(R.order):
        p, seen, ok = a, set(), False
        while p not in seen:
            seen.add(p)
            nxt = int(M[p, a])
            if (M[nxt] == p).any():
                ok = True
                break
            p = nxt
        if not ok:
            return False, [a]
    return True, []


def _tripotent(R: FiniteRing):
    idx = np.arange(R.order, dtype=np.int64)
    cube = R.mul[R.mul[idx, idx], idx]
    bad = cube != idx
    if bad.any():
        return False, [int(np.argmax(bad))]
    return True, []


def _boolean(R: FiniteRing):
    idx = np.arange(R.order, dtype=np.int64)
    bad = R.mul[idx, idx] != idx
    if bad.any():
        return False, [int(np.argmax(bad))]
    return True, []


def _reduced(R: FiniteRing):
    nil = nilpotents(R)
    if len(nil) == 1:
        return True, []
    w = next(i for i in nil.indices if i != R.zero)
    return False, [w]


def _abelian(R: FiniteRing):
    bad = idempotents(R).mask & ~center(R).mask
    if bad.any():
        return False, [int(np.argmax(bad))]
    return True, []


def _tripotent_elements(R: FiniteRing) -> np.ndarray:
    idx = np.arange(R.order, dtype=np.int64)
    return np.flatnonzero(R.mul[R.mul[idx, idx], idx] == idx)


def _semi_tripotent(R: FiniteRing):
    jmask = jacobson_radical(R).mask
    tri = _tripotent_elements(R)
    result, witness = True, []
    for rows in _row_chunks(R.order, tri.size):
        diff = R.add[rows[:, None], R.neg[tri][None, :]]
        ok = jmask[diff].any(axis=1)
        if not ok.all():
            result, witness = False, [int(rows[int(np.argmax(~ok))])]
            break
    alt = _tripotent(mod_radical(R))[0] and _lifts_mod_radical(R)
    if alt != result:
        raise RingError(f"{R.label}: semi-tripotent characterizations disagree")
    return result, witness


def _local(R: FiniteRing):
    RJ = mod_radical(R)
    return (RJ.order == 1 or len(units(RJ)) == RJ.order - 1), []


def _semisimple(R: FiniteRing):
    J = jacobson_radical(R)
    if len(J) == 1:
        return True, []
    w = next(i for i in J.indices if i != R.zero)
    return False, [w]


def _semipotent(R: FiniteRing):
    jmask = jacobson_radical(R).mask
    target = idempotents(R).mask.copy()
    target[R.zero] = False
    for rows in _row_chunks(R.order, R.order):
        ok = target[R.mul[rows, :]].any(axis=1) | jmask[rows]
        if not ok.all():
            return False, [int(rows[int(np.argmax(~ok))])]
    return True, []


def _dedekind_finite(R: FiniteRing):
    eq = R.mul == R.one
    bad = eq & ~eq.T
    if bad.any():
        a, b = _first_pair(bad)
        return False, [a, b]
    return True, []


def _first_pair(mask2d: np.ndarray) -> tuple[int, int]:
    pos = np.argwhere(mask2d)[0]
    return int(pos[0]), int(pos[1])


def _two_primal(R: FiniteRing):
    # for finite rings the lower nil-radical equals J, so 2-primal means
    # Nil(R) = J(R) as sets
    nil, j = nilpotents(R).mask, jacobson_radical(R).mask
    bad = nil != j
    if bad.any():
        return False, [int(np.argmax(bad))]
    return True, []


# ---------------------------------------------------------------------------
# Public boolean predicates
# ---------------------------------------------------------------------------

def is_clean(R): return _clean(R)[0]
def is_exchange(R): return _exchange(R)[0]
def is_semiregular(R): return _regular(mod_radical(R))[0] and _lifts_mod_radical(R)
def is_regular(R): return _regular(R)[0]
def is_strongly_regular(R): return _strongly_regular(R)[0]
def is_unit_regular(R): return _unit_regular(R)[0]
def is_pi_regular(R): return _pi_regular(R)[0]
def is_strongly_pi_regular(R): return _strongly_pi_regular(R)[0]
def is_tripotent(R): return _tripotent(R)[0]
def is_semitripotent(R): return _semi_tripotent(R)[0]
def is_boolean(R): return _boolean(R)[0]
def is_reduced(R): return _reduced(R)[0]
def is_abelian(R): return _abelian(R)[0]
def is_local(R): return _local(R)[0]
def is_semisimple(R): return _semisimple(R)[0]
def is_semipotent(R): return _semipotent(R)[0]
def is_potent(R): return _semipotent(R)[0] and _lifts_mod_radical(R)
def is_dedekind_finite(R): return _dedekind_finite(R)[0]
def is_2primal(R): return _two_primal(R)[0]


def regular_family(R: FiniteRing) -> dict[str, bool]:
    """The five regularity flags in one call."""
    return {"regular": is_regular(R),
            "strongly-regular": is_strongly_regular(R),
            "unit-regular": is_unit_regular(R),
            "pi-regular": is_pi_regular(R),
            "strongly-pi-regular": is_strongly_pi_regular(R)}


# ---------------------------------------------------------------------------
# Aggregate report
# ---------------------------------------------------------------------------

@dataclass
class ClassReport:
    """All predicate flags and element-set cardinalities for one ring."""

    label: str
    order: int
    cardinalities: dict[str, int]
    flags: dict[str, bool]
    witnesses: dict[str, list[int]]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "cardinalities": {k: self.cardinalities[k] for k in CARDINALITY_KEYS},
            "flags": {k: self.flags[k] for k in FLAG_ORDER},
            "witnesses": {k: self.witnesses[k] for k in sorted(self.witnesses)},
        }


def _check_lattice(label: str, flags: dict[str, bool]) -> None:
    for weak, strong in _IMPLICATIONS:
        if flags[weak] and not flags[strong]:
            raise RingError(f"{label}: implication {weak} => {strong} violated")


def classify(R: FiniteRing) -> ClassReport:
    """Evaluate every flag, attach witnesses for failures, and assert the
    implication lattice (a violation is a hard failure, never a report)."""
    def build():
        cards = {"U": len(units(R)), "Id": len(idempotents(R)),
                 "Nil": len(nilpotents(R)), "C": len(center(R)),
                 "QN": len(quasi_nilpotents(R)), "J": len(jacobson_radical(R))}
        cards["Nil*"] = cards["J"]

        flags: dict[str, bool] = {}
        witnesses: dict[str, list[int]] = {}
        for kind in UNIT_KINDS:
            ok, w = unit_property(R, kind)
            flags[kind] = ok
            if w is not None:
                witnesses[kind] = [w]

        named = {
            "clean": _clean, "exchange": _exchange,
            "regular": _regular, "strongly-regular": _strongly_regular,
            "unit-regular": _unit_regular, "pi-regular": _pi_regular,
            "strongly-pi-regular": _strongly_pi_regular,
            "tripotent": _tripotent, "semi-tripotent": _semi_tripotent,
            "boolean": _boolean, "reduced": _reduced, "abelian": _abelian,
            "local": _local, "semisimple": _semisimple,
            "semi-potent": _semipotent, "dedekind-finite": _dedekind_finite,
            "2-primal": _two_primal,
        }
        for name, fn in named.items():
            ok, w = fn(R)
            flags[name] = ok
            if not ok and w:
                witnesses[name] = w
        flags["semi-regular"] = is_semiregular(R)
        flags["potent"] = flags["semi-potent"] and _lifts_mod_radical(R)

        _check_lattice(R.label, flags)
        ordered = {k: flags[k] for k in FLAG_ORDER}
        return ClassReport(R.label, R.order, cards, ordered, witnesses)
    return R.cached("classify", build)


def two_uq(R: FiniteRing) -> bool:
    """The flag used everywhere in the fact catalog, without a full report."""
    return R.cached("two_uq", lambda: unit_property(R, "2-UQ")[0])


def fingerprint(R: FiniteRing) -> tuple:
    """Isomorphism-free structural summary: order, set cardinalities, flags.

    Rings are compared by fingerprint wherever an isomorphism claim needs a
    machine-checkable surrogate; explicit isomorphism search is out of scope.
    """
    rep = classify(R)
    return (rep.order,
            tuple(rep.cardinalities[k] for k in CARDINALITY_KEYS),
            tuple(rep.flags[k] for k in FLAG_ORDER))
