"""Command-line interface: analyze one ring, run the fact catalog, or emit
a corpus file.

Exit codes are frozen for scripting: 0 success, 1 parse/semantic error,
2 cap violation, 3 at least one failing check.  JSON reports carry a
versioned ``schema`` field, keep a stable field order, and contain exact
integers only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import dsl
from .classify import CARDINALITY_KEYS, FLAG_ORDER, classify
from .core import CapExceeded, DEFAULT_MAX_ORDER, FiniteRing, center, \
    idempotents, jacobson_radical, nilpotents, prime_radical, \
    quasi_nilpotents, units
from .harness import (DEFAULT_CORPUS_MAX_ORDER, DEFAULT_FAMILIES, Corpus,
                      check_ids, corpus_text, generate_corpus, load_corpus,
                      run_all)

SCHEMA = "finring-report/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_CHECK_FAILED = 3

_SET_FNS = {"U": units, "Id": idempotents, "Nil": nilpotents, "C": center,
            "QN": quasi_nilpotents, "J": jacobson_radical, "Nil*": prime_radical}
_SET_ALIASES = {"NILSTAR": "Nil*", "NIL*": "Nil*", "U": "U", "ID": "Id",
                "NIL": "Nil", "C": "C", "QN": "QN", "J": "J"}


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _write_json(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _report_header(command: str) -> dict:
    return {"schema": SCHEMA, "version": __version__, "command": command}


def _set_listing(ring: FiniteRing, names: list[str], named: bool) -> dict:
    listing = {}
    for name in names:
        members = _SET_FNS[name](ring)
        idxs = list(members.indices)
        if named:
            listing[name] = [ring.element_name(i) for i in idxs]
        else:
            listing[name] = idxs
    return listing


def cmd_analyze(args) -> int:
    try:
        ast = dsl.parse_spec(args.spec)
    except dsl.SpecSyntaxError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        ring = dsl.build_ring(ast, max_order=args.max_order)
    except CapExceeded as exc:
        return _fail(str(exc), EXIT_CAP)
    except dsl.SpecSemanticError as exc:
        return _fail(str(exc), EXIT_USAGE)

    report = classify(ring)
    doc = _report_header("analyze")
    doc["ring"] = report.to_dict()

    set_names: list[str] = []
    if args.sets:
        for token in args.sets.split(","):
            token = token.strip()
            canon = _SET_ALIASES.get(token.upper())
            if canon is None:
                return _fail(f"unknown set {token!r}; expected one of "
                             f"{', '.join(_SET_FNS)}", EXIT_USAGE)
            if canon not in set_names:
                set_names.append(canon)
        doc["sets"] = _set_listing(ring, set_names, args.named)

    print(f"ring  : {ring.label}")
    print(f"order : {ring.order}")
    cards = report.cardinalities
    print("sets  : " + "  ".join(f"|{k}|={cards[k]}" for k in CARDINALITY_KEYS))
    print("flags :")
    row = []
    for k in FLAG_ORDER:
        row.append(f"{k}={'yes' if report.flags[k] else 'no'}")
        if len(row) == 3:
            print("  " + "  ".join(f"{c:24s}" for c in row).rstrip())
            row = []
    if row:
        print("  " + "  ".join(f"{c:24s}" for c in row).rstrip())
    if report.witnesses:
        print("witnesses (failing flags):")
        for k in sorted(report.witnesses):
            ws = report.witnesses[k]
            shown = ", ".join(ring.element_name(w) for w in ws) if args.named \
                else ", ".join(map(str, ws))
            print(f"  {k}: {shown}")
    for name in set_names:
        members = doc["sets"][name]
        print(f"{name} = {{{', '.join(map(str, members))}}}")

    if args.json:
        _write_json(doc, args.json)
    return EXIT_OK


def _corpus_from_args(args) -> Corpus:
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            return load_corpus(fh.read(), cap=args.max_order)
    bound = min(DEFAULT_CORPUS_MAX_ORDER, args.max_order)
    return generate_corpus(max_order=bound, seed=args.seed,
                           families=args.families.split(",") if args.families else None,
                           cap=args.max_order)


def cmd_check(args) -> int:
    only = None
    if args.only:
        only = [tok.strip() for tok in args.only.split(",") if tok.strip()]
        unknown = [tok for tok in only if tok not in check_ids()]
        if unknown:
            return _fail(f"unknown check ids {unknown}; known: {list(check_ids())}",
                         EXIT_USAGE)
    try:
        corpus = _corpus_from_args(args)
    except dsl.SpecSyntaxError as exc:
        return _fail(f"corpus: {exc}", EXIT_USAGE)
    except dsl.SpecSemanticError as exc:
        return _fail(f"corpus: {exc}", EXIT_USAGE)
    except CapExceeded as exc:
        return _fail(f"corpus: {exc}", EXIT_CAP)
    except (OSError, ValueError) as exc:
        return _fail(str(exc), EXIT_USAGE)

    results = run_all(corpus, only=only, cap=args.max_order)

    for res in results:
        line = (f"{res.check_id:9s} {res.status:7s} tested={res.rings_tested:4d} "
                f"skipped={res.rings_skipped:4d} ({res.runtime_ms} ms)")
        print(line)
        for cex in res.counterexamples:
            print(f"  counterexample: ring={cex['ring']} witness={cex['witness']}"
                  + (f" note={cex['note']}" if "note" in cex else ""))
        if res.status == "skipped":
            print(f"  reason: {res.skip_reason}")
    passed = sum(r.status == "pass" for r in results)
    failed = sum(r.status == "fail" for r in results)
    skipped = sum(r.status == "skipped" for r in results)
    print(f"summary: {passed} pass, {failed} fail, {skipped} skipped "
          f"({len(corpus.entries)} corpus rings)")

    if args.json:
        doc = _report_header("check")
        doc["corpus"] = {
            "seed": corpus.provenance.get("seed"),
            "max_order": corpus.provenance.get("max_order"),
            "families": corpus.provenance.get("families"),
            "size": len(corpus.entries),
        }
        doc["checks"] = [r.to_dict() for r in results]
        doc["summary"] = {"pass": passed, "fail": failed, "skipped": skipped}
        _write_json(doc, args.json)

    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_corpus(args) -> int:
    families = args.families.split(",") if args.families else None
    try:
        corpus = generate_corpus(max_order=min(args.max_order, DEFAULT_MAX_ORDER),
                                 seed=args.seed, families=families,
                                 cap=max(args.max_order, DEFAULT_MAX_ORDER))
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    for item in corpus.provenance["skipped"]:
        print(f"skipped {item['spec']} (order {item['order']} over the bound)",
              file=sys.stderr)
    sys.stdout.write(corpus_text(corpus))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finring",
        description="Finite-ring classification and fact checking")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="build one ring and classify it")
    p.add_argument("spec", help='construction expression, e.g. "Z(12)"')
    p.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p.add_argument("--sets", metavar="NAMES",
                   help="comma list of element sets to include (U,Id,Nil,C,QN,J,Nil*)")
    p.add_argument("--named", action="store_true",
                   help="render elements with construction-aware names")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help="element-count cap (default %(default)s)")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("check", help="run the fact catalog over a corpus")
    p.add_argument("--corpus", metavar="FILE",
                   help="corpus file (one spec per line); default: generated corpus")
    p.add_argument("--only", metavar="IDS", help="comma list of check ids")
    p.add_argument("--seed", type=int, default=0, help="corpus seed")
    p.add_argument("--families", metavar="LIST",
                   help="restrict the generated corpus to these families")
    p.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help="element-count cap (default %(default)s)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("corpus", help="write a deterministic corpus file to stdout")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--max-order", type=int, default=DEFAULT_CORPUS_MAX_ORDER,
                   help="order bound for generated entries (default %(default)s)")
    p.add_argument("--families", metavar="LIST",
                   help=f"comma list from {','.join(DEFAULT_FAMILIES)}")
    p.set_defaults(fn=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
