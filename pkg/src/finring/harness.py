"""Executable fact catalog over corpora of small finite rings.

Each check encodes one structural statement about 2-UQ rings and their
relatives as a scan over every corpus ring meeting the statement's
hypothesis.  Rings outside the hypothesis are skipped, never counted as
passes; a failing check carries reproducible counterexamples (ring label
plus witness element indices, smallest indices first).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import dsl
from .classify import classify, is_2uq_strong_form, two_uq, unit_property
from .constructions import (AbelianGroup, BimodulePairing, abelian_of,
                            augmentation_ideal, formal_triangular,
                            group_exponent, is_p_group, is_prime, morita_ring,
                            zmod)
from .core import (DEFAULT_MAX_ORDER, FiniteRing, characteristic, corner_ring,
                   embed_int, idempotents, ideal_generated, is_good_subring,
                   jacobson_radical, quasi_nilpotents, quotient, subring_ring,
                   units)

DEFAULT_CORPUS_MAX_ORDER = 256
DEFAULT_FAMILIES = ("zmod", "field", "product", "matrix", "triangular",
                    "trivext", "polymod", "groupring", "quotient", "corner")


@dataclass
class CorpusEntry:
    spec: object
    ring: FiniteRing

    @property
    def label(self) -> str:
        return self.ring.label


@dataclass
class Corpus:
    entries: list[CorpusEntry]
    provenance: dict

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]


@dataclass
class CheckResult:
    check_id: str
    statement: str
    status: str                       # "pass" | "fail" | "skipped"
    rings_tested: int
    rings_skipped: int
    counterexamples: list[dict]
    details: list[dict] = field(default_factory=list)
    runtime_ms: int = 0
    skip_reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "statement": self.statement,
            "status": self.status,
            "rings_tested": self.rings_tested,
            "rings_skipped": self.rings_skipped,
            "counterexamples": self.counterexamples,
            "details": self.details,
            "runtime_ms": self.runtime_ms,
            "skip_reason": self.skip_reason,
        }


# ---------------------------------------------------------------------------
# Corpus generation
# ---------------------------------------------------------------------------

def _default_spec_texts(max_order: int, rng: random.Random) -> list[str]:
    texts: list[str] = []
    texts += [f"Z({m})" for m in range(2, 37)]
    texts += ["GF(2, 1)", "GF(3, 1)", "GF(2, 2)", "GF(2, 3)", "GF(2, 4)",
              "GF(3, 2)", "GF(3, 3)", "GF(5, 2)"]
    texts += ["Prod(Z(4), Z(3))", "Prod(Z(2), Z(3))", "Prod(Z(2), Z(2))",
              "Prod(GF(2, 2), Z(2))"]
    pool = [f"Z({m})" for m in range(2, 13)] + ["GF(2, 2)", "GF(2, 3)", "GF(3, 2)"]
    picked = 0
    while picked < 20:
        a, b = rng.choice(pool), rng.choice(pool)
        text = f"Prod({a}, {b})"
        if dsl.spec_order(dsl.parse_spec(text)) <= max_order:
            texts.append(text)
            picked += 1
    texts += ["M(2, Z(2))", "M(2, Z(3))", "M(2, Z(4))", "M(2, GF(2, 2))"]
    texts += ["T(2, Z(2))", "T(2, Z(3))", "T(2, Z(4))", "T(2, Z(5))",
              "T(2, GF(2, 2))", "T(3, Z(2))"]
    texts += ["TrivExt(Z(2))", "TrivExt(Z(3))", "TrivExt(Z(4))", "TrivExt(Z(5))",
              "TrivExt(Z(6))", "TrivExt(Z(12))", "TrivExt(GF(2, 2))"]
    texts += ["PolyMod(Z(2), 2)", "PolyMod(Z(2), 3)", "PolyMod(Z(3), 2)",
              "PolyMod(Z(3), 3)", "PolyMod(Z(4), 2)", "PolyMod(Z(5), 2)",
              "PolyMod(Z(6), 2)", "PolyMod(GF(2, 2), 2)"]
    texts += ["GroupRing(Z(2), C(2))", "GroupRing(Z(2), C(3))",
              "GroupRing(Z(2), C(4))", "GroupRing(Z(2), C(6))",
              "GroupRing(Z(2), Klein)", "GroupRing(Z(2), S3)",
              "GroupRing(Z(2), D4)", "GroupRing(Z(2), Q8)",
              "GroupRing(Z(3), C(2))", "GroupRing(Z(3), C(3))",
              "GroupRing(Z(3), C(4))", "GroupRing(Z(4), C(2))",
              "GroupRing(Z(4), C(4))", "GroupRing(Z(6), C(2))",
              "GroupRing(GF(2, 2), C(2))"]
    return texts


_QUOTIENT_HOSTS = ("Z(12)", "Z(16)", "Z(18)", "Z(24)", "Z(36)",
                   "T(2, Z(4))", "TrivExt(Z(4))", "PolyMod(Z(3), 3)")
_CORNER_HOSTS = ("Z(6)", "Z(12)", "Z(30)", "M(2, Z(2))", "T(2, Z(2))",
                 "Prod(Z(2), Z(3))")

_FAMILY_OF_NODE = {
    dsl.ZSpec: "zmod", dsl.GFSpec: "field", dsl.ProdSpec: "product",
    dsl.MatSpec: "matrix", dsl.TriSpec: "triangular",
    dsl.TrivExtSpec: "trivext", dsl.PolyModSpec: "polymod",
    dsl.GroupRingSpec: "groupring", dsl.QuotSpec: "quotient",
    dsl.CornerSpec: "corner",
}


def generate_corpus(max_order: int = DEFAULT_CORPUS_MAX_ORDER, seed: int = 0,
                    families=None, cap: int = DEFAULT_MAX_ORDER) -> Corpus:
    """Deterministic corpus of validated rings, one per distinct label.

    ``max_order`` bounds the order of generated entries (the hard cap stays
    separate); ``families`` restricts the construction families.
    """
    families = tuple(families) if families else DEFAULT_FAMILIES
    unknown = set(families) - set(DEFAULT_FAMILIES)
    if unknown:
        raise ValueError(f"unknown families {sorted(unknown)}; "
                         f"known: {DEFAULT_FAMILIES}")
    rng = random.Random(seed)
    bound = min(max_order, cap)

    entries: list[CorpusEntry] = []
    skipped: list[dict] = []
    seen: set[str] = set()

    def admit(ast) -> None:
        text = dsl.print_spec(ast)
        if text in seen:
            return
        seen.add(text)
        predicted = dsl.spec_order(ast)
        if predicted > bound:
            skipped.append({"spec": text, "order": predicted})
            return
        ring = dsl.build_ring(ast, max_order=cap)
        entries.append(CorpusEntry(ast, ring))

    for text in _default_spec_texts(bound, rng):
        ast = dsl.parse_spec(text)
        if _FAMILY_OF_NODE[type(ast)] in families:
            admit(ast)

    by_label = {e.label: e.ring for e in entries}

    if "quotient" in families:
        for host_text in _QUOTIENT_HOSTS:
            host = by_label.get(host_text)
            if host is None:
                continue
            candidates = [a for a in range(1, host.order) if a not in units(host)]
            rng.shuffle(candidates)
            for g in candidates:
                ideal = ideal_generated(host, [g])
                if 1 < len(ideal) < host.order:
                    admit(dsl.QuotSpec(dsl.parse_spec(host_text), (g,)))
                    break

    if "corner" in families:
        for host_text in _CORNER_HOSTS:
            host = by_label.get(host_text)
            if host is None:
                continue
            for e in idempotents(host).indices:
                admit(dsl.CornerSpec(dsl.parse_spec(host_text), int(e)))

    return Corpus(entries, {"seed": seed, "max_order": max_order,
                            "families": list(families), "skipped": skipped})


def corpus_text(corpus: Corpus) -> str:
    """Persistable corpus file: a seed header plus one spec per line."""
    seed = corpus.provenance.get("seed", 0)
    lines = [f"# seed={seed}"] + [e.label for e in corpus.entries]
    return "\n".join(lines) + "\n"


def load_corpus(text: str, cap: int = DEFAULT_MAX_ORDER) -> Corpus:
    """Parse a corpus file; parse errors carry the file line number."""
    entries: list[CorpusEntry] = []
    seed = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = line.replace(" ", "")
            if m.startswith("#seed="):
                seed = int(m[6:])
            continue
        try:
            ast = dsl.parse_spec(line)
        except dsl.SpecSyntaxError as exc:
            raise dsl.SpecSyntaxError(exc.message, lineno, exc.col) from None
        entries.append(CorpusEntry(ast, dsl.build_ring(ast, max_order=cap)))
    return Corpus(entries, {"seed": seed, "max_order": None, "families": None,
                            "skipped": []})


# ---------------------------------------------------------------------------
# Check infrastructure
# ---------------------------------------------------------------------------

class _Context:
    """Build cache shared by the checks of one run."""

    def __init__(self, cap: int):
        self.cap = cap
        self._rings: dict[str, FiniteRing] = {}

    def build(self, ast) -> FiniteRing:
        text = dsl.print_spec(ast)
        if text not in self._rings:
            self._rings[text] = dsl.build_ring(ast, max_order=self.cap)
        return self._rings[text]

    def remember(self, corpus: Corpus) -> None:
        for e in corpus.entries:
            self._rings.setdefault(e.label, e.ring)


def _mod_radical(R: FiniteRing) -> FiniteRing:
    from .core import mod_radical
    return mod_radical(R)


_REGISTRY: dict[str, tuple[str, callable]] = {}


def _check(check_id: str, statement: str):
    def wrap(fn):
        _REGISTRY[check_id] = (statement, fn)
        return fn
    return wrap


def run_check(check_id: str, corpus: Corpus,
              cap: int = DEFAULT_MAX_ORDER) -> CheckResult:
    if check_id not in _REGISTRY:
        raise ValueError(f"unknown check id {check_id!r}; known: {list(_REGISTRY)}")
    ctx = _Context(cap)
    ctx.remember(corpus)
    return _run_one(check_id, corpus, ctx)


def run_all(corpus: Corpus, only=None, cap: int = DEFAULT_MAX_ORDER) -> list[CheckResult]:
    ids = list(_REGISTRY) if only is None else list(only)
    for cid in ids:
        if cid not in _REGISTRY:
            raise ValueError(f"unknown check id {cid!r}; known: {list(_REGISTRY)}")
    ctx = _Context(cap)
    ctx.remember(corpus)
    return [_run_one(cid, corpus, ctx) for cid in ids]


def check_ids() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def check_statement(check_id: str) -> str:
    return _REGISTRY[check_id][0]


def _run_one(check_id: str, corpus: Corpus, ctx: _Context) -> CheckResult:
    statement, fn = _REGISTRY[check_id]
    started = time.perf_counter()
    tested, skipped, counterexamples, details = fn(corpus, ctx)
    runtime_ms = int((time.perf_counter() - started) * 1000)
    if tested == 0:
        status, reason = "skipped", "no corpus ring satisfies the hypothesis"
    elif counterexamples:
        status, reason = "fail", None
    else:
        status, reason = "pass", None
    return CheckResult(check_id, statement, status, tested, skipped,
                       counterexamples, details, runtime_ms, reason)


def _cex(ring: FiniteRing, witness=(), note: str = "") -> dict:
    out = {"ring": ring.label, "witness": [int(w) for w in witness]}
    if note:
        out["note"] = note
    return out


def _primes_in_radical(R: FiniteRing) -> list[int]:
    """Primes p with the element p*1 inside J(R) (only divisors of the
    characteristic can qualify)."""
    char = characteristic(R)
    jmask = jacobson_radical(R).mask
    out = []
    for p in range(2, char + 1):
        if char % p == 0 and is_prime(p) and jmask[embed_int(R, p)]:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# The catalog
# ---------------------------------------------------------------------------

def _base_embedding(entry: CorpusEntry) -> np.ndarray | None:
    """Indices of the canonical base-ring copy inside a composite entry."""
    ring, ast = entry.ring, entry.spec
    info = ring.info
    weights = info.get("weights")
    if isinstance(ast, dsl.TrivExtSpec):
        base = info["base"]
        return np.arange(base.order, dtype=np.int64) * weights[0]
    if isinstance(ast, dsl.PolyModSpec):
        base = info["base"]
        return np.arange(base.order, dtype=np.int64) * weights[0]
    if isinstance(ast, dsl.TriSpec):
        base, positions = info["base"], info["positions"]
        w = sum(weights[t] for t, (i, j) in enumerate(positions) if i == j)
        return np.arange(base.order, dtype=np.int64) * w
    if isinstance(ast, dsl.GroupRingSpec):
        base, group = info["base"], info["group"]
        return np.arange(base.order, dtype=np.int64) * weights[group.identity]
    return None


@_check("C-2.3", "a good unital subring of a 2-UQ ring is itself 2-UQ")
def _c_2_3(corpus, ctx):
    tested = skipped = 0
    cexs, details = [], []
    for entry in corpus.entries:
        emb = _base_embedding(entry)
        if emb is None or not two_uq(entry.ring):
            skipped += 1
            continue
        tested += 1
        if not is_good_subring(entry.ring, emb):
            cexs.append(_cex(entry.ring, note="canonical base copy is not a good subring"))
            continue
        sub = subring_ring(entry.ring, emb)
        ok, w = unit_property(sub, "2-UQ")
        if not ok:
            cexs.append(_cex(entry.ring, [int(emb[w])],
                             note="good subring fails 2-UQ at the witness unit"))
    return tested, skipped, cexs, details


@_check("C-2.4", "quasi-nilpotents of a direct product are exactly the "
                 "componentwise quasi-nilpotents")
def _c_2_4(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.ProdSpec):
            skipped += 1
            continue
        tested += 1
        ring = entry.ring
        parts = ring.info["parts"]
        digits = ring.info["digits"]
        expected = np.ones(ring.order, dtype=bool)
        for t, part in enumerate(parts):
            expected &= quasi_nilpotents(part).mask[digits[:, t]]
        actual = quasi_nilpotents(ring).mask
        bad = expected != actual
        if bad.any():
            cexs.append(_cex(ring, [int(np.argmax(bad))]))
    return tested, skipped, cexs, []


@_check("C-2.5", "a finite direct product is 2-UQ exactly when every factor is")
def _c_2_5(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.ProdSpec):
            skipped += 1
            continue
        tested += 1
        parts = entry.ring.info["parts"]
        if two_uq(entry.ring) != all(two_uq(p) for p in parts):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-2.6", "every corner ring eRe of a 2-UQ ring is 2-UQ")
def _c_2_6(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not two_uq(entry.ring):
            skipped += 1
            continue
        tested += 1
        for e in idempotents(entry.ring).indices:
            sub = corner_ring(entry.ring, e)
            if not two_uq(sub):
                cexs.append(_cex(entry.ring, [e], note="corner at this idempotent"))
    return tested, skipped, cexs, []


@_check("C-2.7", "full matrix rings of size >= 2 over a nonzero ring are never 2-UQ")
def _c_2_7(corpus, ctx):
    tested = skipped = 0
    cexs, details = [], []
    for entry in corpus.entries:
        ast = entry.spec
        if not (isinstance(ast, dsl.MatSpec) and ast.n >= 2
                and dsl.spec_order(ast.inner) > 1):
            skipped += 1
            continue
        tested += 1
        ok, w = unit_property(entry.ring, "2-UQ")
        if ok:
            cexs.append(_cex(entry.ring, note="matrix ring is unexpectedly 2-UQ"))
        else:
            details.append({"ring": entry.label, "witness_unit": int(w)})
    return tested, skipped, cexs, details


@_check("C-2.9", "2-UQ rings are Dedekind-finite")
def _c_2_9(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not two_uq(entry.ring):
            skipped += 1
            continue
        tested += 1
        rep = classify(entry.ring)
        if not rep.flags["dedekind-finite"]:
            cexs.append(_cex(entry.ring, rep.witnesses.get("dedekind-finite", [])))
    return tested, skipped, cexs, []


@_check("C-2.10", "a finite field is 2-UQ exactly when it has 2 or 3 elements")
def _c_2_10(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GFSpec):
            skipped += 1
            continue
        tested += 1
        if two_uq(entry.ring) != (entry.ring.order in (2, 3)):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


def _equiv_base(corpus, ctx, node_type):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, node_type):
            skipped += 1
            continue
        tested += 1
        base = entry.ring.info["base"]
        if two_uq(entry.ring) != two_uq(base):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-2.12a", "the trivial extension of R by R is 2-UQ exactly when R is")
def _c_2_12a(corpus, ctx):
    return _equiv_base(corpus, ctx, dsl.TrivExtSpec)


def _formal_triangular_instances(ctx):
    """Canned formal triangular matrix rings (upper module, zero pairings)."""
    instances = []
    for am, bm in ((2, 2), (3, 3), (4, 2), (4, 4), (5, 5), (6, 2), (9, 3), (5, 2)):
        A, B = zmod(am), zmod(bm)
        if bm == 1 or am % bm:
            continue
        # A acts on Z_bm through reduction mod bm; B acts by multiplication
        av = np.arange(am, dtype=np.int64)[:, None]
        bv = np.arange(bm, dtype=np.int64)[None, :]
        act_am = (av * bv) % bm
        act_mb = (bv.T * bv) % bm
        ring = formal_triangular(A, B, abelian_of(B), act_am, act_mb,
                                 max_order=ctx.cap)
        instances.append((ring, A, B))
    # mixed corners glued over the zero module
    for am, bm in ((2, 3), (5, 2)):
        A, B = zmod(am), zmod(bm)
        M = AbelianGroup(1, [[0]], [0], 0, label="0")
        ring = formal_triangular(A, B, M, np.zeros((am, 1), dtype=np.int32),
                                 np.zeros((1, bm), dtype=np.int32),
                                 max_order=ctx.cap)
        instances.append((ring, A, B))
    return instances


@_check("C-2.12b", "a formal triangular matrix ring is 2-UQ exactly when both "
                   "diagonal corner rings are")
def _c_2_12b(corpus, ctx):
    tested = 0
    cexs = []
    for ring, A, B in _formal_triangular_instances(ctx):
        tested += 1
        if two_uq(ring) != (two_uq(A) and two_uq(B)):
            cexs.append(_cex(ring))
    return tested, 0, cexs, []


@_check("C-2.12c", "the upper triangular matrix ring T_n(R) is 2-UQ exactly "
                   "when R is")
def _c_2_12c(corpus, ctx):
    return _equiv_base(corpus, ctx, dsl.TriSpec)


@_check("C-2.12d", "the truncated polynomial ring R[x]/(x^n) is 2-UQ exactly "
                   "when R is")
def _c_2_12d(corpus, ctx):
    return _equiv_base(corpus, ctx, dsl.PolyModSpec)


def _morita_instances(ctx):
    """Morita context rings over small commutative bases: zero pairings,
    nilpotent-scaled pairings (hypothesis holds), and one full-context ring
    over Z_2 whose trace ideals are not nilpotent (hypothesis fails)."""
    instances = []
    for m, c in ((2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (4, 2)):
        R = zmod(m)
        v = np.arange(m, dtype=np.int64)
        pair = (v[:, None] * v[None, :] * c) % m
        ctx_data = BimodulePairing(R, R, abelian_of(R), abelian_of(R),
                                   am=R.mul, mb=R.mul, bn=R.mul, na=R.mul,
                                   phi=pair, psi=pair)
        label = f"MoritaScaled(Z({m}), c={c})"
        instances.append((morita_ring(ctx_data, ctx.cap, label=label), R, R))
    R = zmod(2)
    full = BimodulePairing(R, R, abelian_of(R), abelian_of(R),
                           am=R.mul, mb=R.mul, bn=R.mul, na=R.mul,
                           phi=R.mul, psi=R.mul)
    instances.append((morita_ring(full, ctx.cap, label="MoritaFull(Z(2))"), R, R))
    return instances


@_check("C-2.13", "a Morita context ring whose trace ideals are nilpotent and "
                  "central is 2-UQ exactly when both corner rings are")
def _c_2_13(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for ring, A, B in _morita_instances(ctx):
        if not (ring.info["trace_nilpotent"] and ring.info["trace_central"]):
            skipped += 1
            continue
        tested += 1
        if two_uq(ring) != (two_uq(A) and two_uq(B)):
            cexs.append(_cex(ring))
    return tested, skipped, cexs, []


@_check("C-2.18", "if I is an ideal inside the radical and R/I is 2-UQ, then "
                  "R is 2-UQ")
def _c_2_18(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        J = jacobson_radical(R)
        ideals = {}
        for g in J.indices:
            ideal = ideal_generated(R, [g])
            ideals[frozenset(ideal.indices)] = ideal
        ideals[frozenset(J.indices)] = J
        tested += 1
        for ideal in ideals.values():
            Q = quotient(R, ideal)
            if two_uq(Q) and not two_uq(R):
                cexs.append(_cex(R, sorted(ideal.indices),
                                 note="quotient by this ideal is 2-UQ"))
    return tested, skipped, cexs, []


@_check("C-2.19a", "a 2-UQ ring is local exactly when the quotient by its "
                   "radical has 2 or 3 elements")
def _c_2_19a(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        if R.order == 1 or not two_uq(R):
            skipped += 1
            continue
        tested += 1
        rep = classify(R)
        if rep.flags["local"] != (_mod_radical(R).order in (2, 3)):
            cexs.append(_cex(R))
    return tested, skipped, cexs, []


@_check("C-2.19b", "a semisimple ring is 2-UQ exactly when it is tripotent")
def _c_2_19b(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        rep = classify(entry.ring)
        if not rep.flags["semisimple"]:
            skipped += 1
            continue
        tested += 1
        if rep.flags["2-UQ"] != rep.flags["tripotent"]:
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-2.20", "Z_m is 2-UQ exactly when m = 2^a * 3^b with a, b >= 0 "
                  "(m >= 2; the nonnegative convention keeps m = 2, 3, 4, 8, "
                  "9, ... admissible)")
def _c_2_20(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.ZSpec) or entry.spec.m < 2:
            skipped += 1
            continue
        tested += 1
        m = entry.spec.m
        while m % 2 == 0:
            m //= 2
        while m % 3 == 0:
            m //= 3
        if two_uq(entry.ring) != (m == 1):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-3.1", "in a 2-UQ ring no units u, v satisfy u^2 + v = 1")
def _c_3_1(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        if R.order == 1 or not two_uq(R):
            skipped += 1
            continue
        tested += 1
        us = np.asarray(units(R).indices, dtype=np.int64)
        sums = R.add[np.ix_(R.mul[us, us], us)] == R.one
        if sums.any():
            i, j = np.argwhere(sums)[0]
            cexs.append(_cex(R, [int(us[i]), int(us[j])]))
    return tested, skipped, cexs, []


@_check("C-3.3", "for a semi-potent ring: R/J 2-UQ, R/J tripotent, R/J 2-UU, "
                 "and R 2-UJ are all equivalent")
def _c_3_3(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        rep = classify(R)
        if not rep.flags["semi-potent"]:
            skipped += 1
            continue
        tested += 1
        quot = classify(_mod_radical(R))
        conds = (quot.flags["2-UQ"], quot.flags["tripotent"],
                 quot.flags["2-UU"], rep.flags["2-UJ"])
        if len(set(conds)) > 1:
            cexs.append(_cex(R, note=f"conditions evaluate to {conds}"))
    return tested, skipped, cexs, []


@_check("C-3.4", "for a 2-UQ ring: regular, strongly regular, unit-regular, "
                 "tripotent, and (pi-regular and reduced) coincide")
def _c_3_4(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        rep = classify(R)
        if not rep.flags["2-UQ"]:
            skipped += 1
            continue
        tested += 1
        conds = (rep.flags["regular"],
                 rep.flags["pi-regular"] and rep.flags["reduced"],
                 rep.flags["strongly-regular"], rep.flags["unit-regular"],
                 rep.flags["tripotent"])
        if len(set(conds)) > 1:
            cexs.append(_cex(R, note=f"conditions evaluate to {conds}"))
    return tested, skipped, cexs, []


@_check("C-3.5", "for a potent ring: R 2-UQ, R/J 2-UQ, R/J tripotent, R 2-UJ, "
                 "R/J 2-UJ, and R/J 2-UU are all equivalent")
def _c_3_5(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        R = entry.ring
        rep = classify(R)
        if not rep.flags["potent"]:
            skipped += 1
            continue
        tested += 1
        quot = classify(_mod_radical(R))
        conds = (rep.flags["2-UQ"], quot.flags["2-UQ"], quot.flags["tripotent"],
                 rep.flags["2-UJ"], quot.flags["2-UJ"], quot.flags["2-UU"])
        if len(set(conds)) > 1:
            cexs.append(_cex(R, note=f"conditions evaluate to {conds}"))
    return tested, skipped, cexs, []


@_check("C-3.6", "a ring is clean and 2-UQ exactly when it is semi-tripotent")
def _c_3_6(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        rep = classify(entry.ring)
        tested += 1
        if (rep.flags["clean"] and rep.flags["2-UQ"]) != rep.flags["semi-tripotent"]:
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-3.7", "on finite (hence artinian) rings the flags 2-UQ, 2-UJ and "
                 "2-UU coincide")
def _c_3_7(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        rep = classify(entry.ring)
        tested += 1
        if len({rep.flags["2-UQ"], rep.flags["2-UJ"], rep.flags["2-UU"]}) > 1:
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-4.1", "if p*1 lies in J(R) and G is a p-group, the augmentation "
                 "ideal of RG lies in J(RG)")
def _c_4_1(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GroupRingSpec):
            skipped += 1
            continue
        RG = entry.ring
        base, group = RG.info["base"], RG.info["group"]
        if not any(is_p_group(group, p) for p in _primes_in_radical(base)):
            skipped += 1
            continue
        tested += 1
        delta = augmentation_ideal(RG)
        outside = delta.mask & ~jacobson_radical(RG).mask
        if outside.any():
            cexs.append(_cex(RG, [int(np.argmax(outside))]))
    return tested, skipped, cexs, []


@_check("C-4.2a", "if the group ring RG is 2-UQ then R is 2-UQ")
def _c_4_2a(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GroupRingSpec):
            skipped += 1
            continue
        tested += 1
        base = entry.ring.info["base"]
        if two_uq(entry.ring) and not two_uq(base):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-4.2b", "if R is 2-UQ, p*1 lies in J(R), and G is a p-group, then "
                  "RG is 2-UQ")
def _c_4_2b(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GroupRingSpec):
            skipped += 1
            continue
        base, group = entry.ring.info["base"], entry.ring.info["group"]
        if not (two_uq(base)
                and any(is_p_group(group, p) for p in _primes_in_radical(base))):
            skipped += 1
            continue
        tested += 1
        if not two_uq(entry.ring):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-4.3", "if RG is 2-UQ and 2*1 lies in J(R), then G is a 2-group")
def _c_4_3(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GroupRingSpec):
            skipped += 1
            continue
        base, group = entry.ring.info["base"], entry.ring.info["group"]
        if 2 not in _primes_in_radical(base):
            skipped += 1
            continue
        tested += 1
        if two_uq(entry.ring) and not is_p_group(group, 2):
            cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-4.4", "if 3*1 lies in J(R), G is a p-group and RG is 2-UQ, then G "
                 "is a 3-group or has exponent at most 2")
def _c_4_4(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        if not isinstance(entry.spec, dsl.GroupRingSpec):
            skipped += 1
            continue
        base, group = entry.ring.info["base"], entry.ring.info["group"]
        is_primary = group.order == 1 or any(
            is_p_group(group, p) for p in range(2, group.order + 1) if is_prime(p))
        if 3 not in _primes_in_radical(base) or not is_primary:
            skipped += 1
            continue
        tested += 1
        if two_uq(entry.ring):
            if not (is_p_group(group, 3) or group_exponent(group) <= 2):
                cexs.append(_cex(entry.ring))
    return tested, skipped, cexs, []


@_check("C-DEF", "for every unit, u^2 in 1 + QN agrees with u^2 being a "
                 "commuting idempotent-plus-quasi-nilpotent sum")
def _c_def(corpus, ctx):
    tested = skipped = 0
    cexs = []
    for entry in corpus.entries:
        tested += 1
        plain = two_uq(entry.ring)
        strong = is_2uq_strong_form(entry.ring)
        if plain != strong:
            cexs.append(_cex(entry.ring,
                             note=f"plain form {plain}, decomposition form {strong}"))
    return tested, skipped, cexs, []
