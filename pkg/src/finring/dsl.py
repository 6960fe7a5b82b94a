"""The ring-construction DSL: AST, parser, printer, and elaboration.

Grammar (whitespace-insensitive, integers are unsigned decimal):

    spec  := 'Z' '(' int ')'
           | 'GF' '(' int ',' int ')'
           | 'Prod' '(' spec {',' spec} ')'
           | 'M' '(' int ',' spec ')'
           | 'T' '(' int ',' spec ')'
           | 'TrivExt' '(' spec ')'
           | 'PolyMod' '(' spec ',' int ')'
           | 'GroupRing' '(' spec ',' group ')'
           | 'Quot' '(' spec ',' int {',' int} ')'
           | 'Corner' '(' spec ',' int ')'
    group := 'C' '(' int ')'
           | 'GProd' '(' group {',' group} ')'
           | 'S3' | 'D4' | 'Q8' | 'Klein'

Syntax problems raise SpecSyntaxError with line/column; impossible values
(cap violations, non-prime GF characteristic, a Corner element that is not
idempotent, ...) surface as SpecSemanticError during build.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import DEFAULT_MAX_ORDER, FiniteRing, RingError, CapExceeded, \
    corner_ring, ideal_generated, quotient
from . import constructions as cons


class SpecSyntaxError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class SpecSemanticError(Exception):
    pass


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class ZSpec:
    m: int


@dataclass(frozen=True)
class GFSpec:
    p: int
    k: int


@dataclass(frozen=True)
class ProdSpec:
    parts: tuple


@dataclass(frozen=True)
class MatSpec:
    n: int
    inner: object


@dataclass(frozen=True)
class TriSpec:
    n: int
    inner: object


@dataclass(frozen=True)
class TrivExtSpec:
    inner: object


@dataclass(frozen=True)
class PolyModSpec:
    inner: object
    n: int


@dataclass(frozen=True)
class GroupRingSpec:
    inner: object
    group: object


@dataclass(frozen=True)
class QuotSpec:
    inner: object
    gens: tuple


@dataclass(frozen=True)
class CornerSpec:
    inner: object
    elem: int


@dataclass(frozen=True)
class CycSpec:
    n: int


@dataclass(frozen=True)
class GProdSpec:
    parts: tuple


@dataclass(frozen=True)
class NamedGroupSpec:
    name: str


RING_NODES = (ZSpec, GFSpec, ProdSpec, MatSpec, TriSpec, TrivExtSpec,
              PolyModSpec, GroupRingSpec, QuotSpec, CornerSpec)
GROUP_NAMES = ("S3", "D4", "Q8", "Klein")


# --- Tokenizer / parser ----------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)"
                       r"|(?P<lpar>\()|(?P<rpar>\))|(?P<comma>,))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int, int]] = []
        line, line_start = 1, 0
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                ws = re.match(r"\s*", text[pos:]).end()
                at = pos + ws
                if at >= len(text):
                    break
                line, col = self._pos_to_linecol(text, at)
                raise SpecSyntaxError(f"unexpected character {text[at]!r}", line, col)
            kind = m.lastgroup
            value = m.group(kind)
            line, col = self._pos_to_linecol(text, m.end() - len(value))
            self.items.append((kind, value, line, col))
            pos = m.end()
        end_line, end_col = self._pos_to_linecol(text, len(text))
        self.items.append(("eof", "", end_line, end_col))
        self.i = 0

    @staticmethod
    def _pos_to_linecol(text: str, pos: int) -> tuple[int, int]:
        line = text.count("\n", 0, pos) + 1
        start = text.rfind("\n", 0, pos) + 1
        return line, pos - start + 1

    def peek(self):
        return self.items[self.i]

    def next(self):
        tok = self.items[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.next()
        if tok[0] != kind:
            raise SpecSyntaxError(f"expected {what}, found {tok[1] or 'end of input'!r}",
                                  tok[2], tok[3])
        return tok


def _parse_int(toks: _Tokens) -> int:
    tok = toks.expect("int", "an integer")
    return int(tok[1])


def _parse_group(toks: _Tokens):
    tok = toks.expect("name", "a group constructor")
    name = tok[1]
    if name == "C":
        toks.expect("lpar", "'('")
        n = _parse_int(toks)
        toks.expect("rpar", "')'")
        return CycSpec(n)
    if name == "GProd":
        toks.expect("lpar", "'('")
        parts = [_parse_group(toks)]
        while toks.peek()[0] == "comma":
            toks.next()
            parts.append(_parse_group(toks))
        toks.expect("rpar", "')'")
        return GProdSpec(tuple(parts))
    if name in GROUP_NAMES:
        return NamedGroupSpec(name)
    raise SpecSyntaxError(f"unknown group constructor {name!r}", tok[2], tok[3])


def _parse_ring(toks: _Tokens):
    tok = toks.expect("name", "a ring constructor")
    name = tok[1]
    if name == "Z":
        toks.expect("lpar", "'('")
        m = _parse_int(toks)
        toks.expect("rpar", "')'")
        return ZSpec(m)
    if name == "GF":
        toks.expect("lpar", "'('")
        p = _parse_int(toks)
        toks.expect("comma", "','")
        k = _parse_int(toks)
        toks.expect("rpar", "')'")
        return GFSpec(p, k)
    if name == "Prod":
        toks.expect("lpar", "'('")
        parts = [_parse_ring(toks)]
        while toks.peek()[0] == "comma":
            toks.next()
            parts.append(_parse_ring(toks))
        toks.expect("rpar", "')'")
        return ProdSpec(tuple(parts))
    if name in ("M", "T"):
        toks.expect("lpar", "'('")
        n = _parse_int(toks)
        toks.expect("comma", "','")
        inner = _parse_ring(toks)
        toks.expect("rpar", "')'")
        return (MatSpec if name == "M" else TriSpec)(n, inner)
    if name == "TrivExt":
        toks.expect("lpar", "'('")
        inner = _parse_ring(toks)
        toks.expect("rpar", "')'")
        return TrivExtSpec(inner)
    if name == "PolyMod":
        toks.expect("lpar", "'('")
        inner = _parse_ring(toks)
        toks.expect("comma", "','")
        n = _parse_int(toks)
        toks.expect("rpar", "')'")
        return PolyModSpec(inner, n)
    if name == "GroupRing":
        toks.expect("lpar", "'('")
        inner = _parse_ring(toks)
        toks.expect("comma", "','")
        group = _parse_group(toks)
        toks.expect("rpar", "')'")
        return GroupRingSpec(inner, group)
    if name == "Quot":
        toks.expect("lpar", "'('")
        inner = _parse_ring(toks)
        gens = []
        while toks.peek()[0] == "comma":
            toks.next()
            gens.append(_parse_int(toks))
        toks.expect("rpar", "')'")
        if not gens:
            raise SpecSyntaxError("Quot needs at least one generator", tok[2], tok[3])
        return QuotSpec(inner, tuple(gens))
    if name == "Corner":
        toks.expect("lpar", "'('")
        inner = _parse_ring(toks)
        toks.expect("comma", "','")
        e = _parse_int(toks)
        toks.expect("rpar", "')'")
        return CornerSpec(inner, e)
    raise SpecSyntaxError(f"unknown ring constructor {name!r}", tok[2], tok[3])


def parse_spec(text: str):
    """Parse a full construction expression; trailing input is an error."""
    toks = _Tokens(text)
    ast = _parse_ring(toks)
    tok = toks.peek()
    if tok[0] != "eof":
        raise SpecSyntaxError(f"unexpected trailing input {tok[1]!r}", tok[2], tok[3])
    return ast


# --- Printer ---------------------------------------------------------------

def print_spec(ast) -> str:
    if isinstance(ast, ZSpec):
        return f"Z({ast.m})"
    if isinstance(ast, GFSpec):
        return f"GF({ast.p}, {ast.k})"
    if isinstance(ast, ProdSpec):
        return "Prod(" + ", ".join(print_spec(p) for p in ast.parts) + ")"
    if isinstance(ast, MatSpec):
        return f"M({ast.n}, {print_spec(ast.inner)})"
    if isinstance(ast, TriSpec):
        return f"T({ast.n}, {print_spec(ast.inner)})"
    if isinstance(ast, TrivExtSpec):
        return f"TrivExt({print_spec(ast.inner)})"
    if isinstance(ast, PolyModSpec):
        return f"PolyMod({print_spec(ast.inner)}, {ast.n})"
    if isinstance(ast, GroupRingSpec):
        return f"GroupRing({print_spec(ast.inner)}, {print_spec(ast.group)})"
    if isinstance(ast, QuotSpec):
        return f"Quot({print_spec(ast.inner)}, {', '.join(map(str, ast.gens))})"
    if isinstance(ast, CornerSpec):
        return f"Corner({print_spec(ast.inner)}, {ast.elem})"
    if isinstance(ast, CycSpec):
        return f"C({ast.n})"
    if isinstance(ast, GProdSpec):
        return "GProd(" + ", ".join(print_spec(p) for p in ast.parts) + ")"
    if isinstance(ast, NamedGroupSpec):
        return ast.name
    raise TypeError(f"not an AST node: {ast!r}")


# --- Elaboration -----------------------------------------------------------

def build_group(ast) -> cons.FiniteGroup:
    if isinstance(ast, CycSpec):
        if ast.n < 1:
            raise SpecSemanticError("cyclic group order must be >= 1")
        return cons.cyclic_group(ast.n)
    if isinstance(ast, GProdSpec):
        return cons.group_product([build_group(p) for p in ast.parts],
                                  label=print_spec(ast))
    if isinstance(ast, NamedGroupSpec):
        return cons.builtin_group(ast.name)
    raise TypeError(f"not a group AST node: {ast!r}")


def build_ring(ast, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Elaborate an AST to a validated ring whose label round-trips."""
    try:
        ring = _build(ast, max_order)
    except CapExceeded:
        raise
    except RingError as exc:
        raise SpecSemanticError(str(exc)) from exc
    ring.label = print_spec(ast)
    return ring


def _build(ast, max_order: int) -> FiniteRing:
    if isinstance(ast, ZSpec):
        if ast.m < 1:
            raise SpecSemanticError("modulus must be >= 1")
        return cons.zmod(ast.m, max_order)
    if isinstance(ast, GFSpec):
        if not cons.is_prime(ast.p):
            raise SpecSemanticError(f"{ast.p} is not prime")
        if ast.k < 1:
            raise SpecSemanticError("field degree must be >= 1")
        return cons.finite_field(ast.p, ast.k, max_order)
    if isinstance(ast, ProdSpec):
        return cons.direct_product([_build(p, max_order) for p in ast.parts], max_order)
    if isinstance(ast, MatSpec):
        if ast.n < 1:
            raise SpecSemanticError("matrix size must be >= 1")
        return cons.matrix_ring(ast.n, _build(ast.inner, max_order), max_order)
    if isinstance(ast, TriSpec):
        if ast.n < 1:
            raise SpecSemanticError("matrix size must be >= 1")
        return cons.upper_triangular(ast.n, _build(ast.inner, max_order), max_order)
    if isinstance(ast, TrivExtSpec):
        return cons.trivial_extension(_build(ast.inner, max_order), max_order)
    if isinstance(ast, PolyModSpec):
        if ast.n < 1:
            raise SpecSemanticError("truncation degree must be >= 1")
        return cons.truncated_poly(_build(ast.inner, max_order), ast.n, max_order)
    if isinstance(ast, GroupRingSpec):
        try:
            G = build_group(ast.group)
        except RingError as exc:
            raise SpecSemanticError(str(exc)) from exc
        return cons.group_ring(_build(ast.inner, max_order), G, max_order)
    if isinstance(ast, QuotSpec):
        host = _build(ast.inner, max_order)
        for g in ast.gens:
            if not 0 <= g < host.order:
                raise SpecSemanticError(
                    f"generator {g} out of range for a ring of order {host.order}")
        ideal = ideal_generated(host, ast.gens)
        return quotient(host, ideal, label=print_spec(ast))
    if isinstance(ast, CornerSpec):
        host = _build(ast.inner, max_order)
        if not 0 <= ast.elem < host.order:
            raise SpecSemanticError(
                f"element {ast.elem} out of range for a ring of order {host.order}")
        if host.mul_i(ast.elem, ast.elem) != ast.elem:
            raise SpecSemanticError(f"element {ast.elem} is not an idempotent "
                                    f"of {host.label}")
        return corner_ring(host, ast.elem, label=print_spec(ast))
    raise TypeError(f"not a ring AST node: {ast!r}")


def spec_order(ast) -> int:
    """Predicted order of the built ring (for cap filtering before building).

    Quot/Corner orders depend on the host's structure; the host order is an
    upper bound and is returned instead.
    """
    if isinstance(ast, ZSpec):
        return ast.m
    if isinstance(ast, GFSpec):
        return ast.p ** ast.k
    if isinstance(ast, ProdSpec):
        out = 1
        for p in ast.parts:
            out *= spec_order(p)
        return out
    if isinstance(ast, MatSpec):
        return spec_order(ast.inner) ** (ast.n * ast.n)
    if isinstance(ast, TriSpec):
        return spec_order(ast.inner) ** (ast.n * (ast.n + 1) // 2)
    if isinstance(ast, TrivExtSpec):
        return spec_order(ast.inner) ** 2
    if isinstance(ast, PolyModSpec):
        return spec_order(ast.inner) ** ast.n
    if isinstance(ast, GroupRingSpec):
        return spec_order(ast.inner) ** group_order(ast.group)
    if isinstance(ast, (QuotSpec, CornerSpec)):
        return spec_order(ast.inner)
    raise TypeError(f"not a ring AST node: {ast!r}")


def group_order(ast) -> int:
    if isinstance(ast, CycSpec):
        return ast.n
    if isinstance(ast, GProdSpec):
        out = 1
        for p in ast.parts:
            out *= group_order(p)
        return out
    if isinstance(ast, NamedGroupSpec):
        return {"S3": 6, "D4": 8, "Q8": 8, "Klein": 4}[ast.name]
    raise TypeError(f"not a group AST node: {ast!r}")
