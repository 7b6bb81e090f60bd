"""Command-line entry point: ``kfcheck validate|export-owl|taxonomy|oracle-compare``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checker import FragmentMode, check_all
from .dsl import DslError, load
from .model import ModelError
from .owl import ExportRefused, export_model, export_schema
from .randgraph import oracle_compare
from .taxonomy import MUTATIONS, mutated, taxonomy_satisfiability

EXIT_OK, EXIT_VIOLATIONS, EXIT_LOAD = 0, 1, 2


def _arity(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("max arity must be at least 2")
    return n


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        return load(path)
    except OSError as e:
        print(f"error: cannot read {path}: {e.strerror}", file=sys.stderr)
    except (DslError, ModelError) as e:
        print(f"error: {path}: {e}", file=sys.stderr)
    return None


def cmd_validate(args) -> int:
    g = _load(args.input)
    if g is None:
        return EXIT_LOAD
    found = check_all(g, FragmentMode(args.fragment), args.max_arity)
    if args.format == "jsonl":
        text = "".join(json.dumps(v.as_json(), sort_keys=True) + "\n" for v in found)
    else:
        text = "".join(f"{v}\n" for v in found)
    _write(text, args.out)
    print(f"{len(found)} violation(s) in {args.input}", file=sys.stderr)
    return EXIT_VIOLATIONS if found else EXIT_OK


def cmd_export_owl(args) -> int:
    if args.schema:
        _write(export_schema(max_arity=args.max_arity).render(), args.out)
        return EXIT_OK
    if not args.input:
        print("error: give a model file or --schema", file=sys.stderr)
        return EXIT_LOAD
    g = _load(args.input)
    if g is None:
        return EXIT_LOAD
    try:
        doc = export_model(g, args.max_arity)
    except ExportRefused as e:
        print(f"error: export refused: {e}", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_VIOLATIONS
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _write(doc.render(), args.out)
    return EXIT_OK


def cmd_taxonomy(args) -> int:
    try:
        cat = mutated(args.mutate)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LOAD
    result = taxonomy_satisfiability(cat)
    bad = [k for k, ok in result.items() if not ok]
    if args.format == "jsonl":
        text = "".join(json.dumps({"label": k, "satisfiable": ok}) + "\n" for k, ok in result.items())
    else:
        text = "".join(f"{k}: {'satisfiable' if ok else 'UNSATISFIABLE'}\n" for k, ok in result.items())
        text += f"{len(result) - len(bad)}/{len(result)} labels satisfiable\n"
    _write(text, args.out)
    return EXIT_VIOLATIONS if bad else EXIT_OK


def cmd_oracle_compare(args) -> int:
    rep = oracle_compare(args.seed, args.count, args.max_arity)
    _write(rep.summary() + "\n", args.out)
    return EXIT_OK if not rep.disagreements else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kfcheck", description="Validate models against the KF metamodel.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--max-arity", type=_arity, default=10,
                        help="largest relationship arity for per-arity axioms (default 10)")

    v = sub.add_parser("validate", help="check a .kfm model against every axiom")
    v.add_argument("input")
    v.add_argument("--fragment", choices=["c2", "full"], default="full")
    v.add_argument("--format", choices=["text", "jsonl"], default="text")
    common(v)
    v.set_defaults(func=cmd_validate)

    e = sub.add_parser("export-owl", help="write OWL functional syntax")
    e.add_argument("input", nargs="?")
    e.add_argument("--schema", action="store_true", help="export the metamodel itself")
    common(e)
    e.set_defaults(func=cmd_export_owl)

    t = sub.add_parser("taxonomy", help="per-label satisfiability of the kind taxonomy")
    t.add_argument("--mutate", action="append", default=[], choices=sorted(MUTATIONS))
    t.add_argument("--format", choices=["text", "jsonl"], default="text")
    t.add_argument("--out")
    t.set_defaults(func=cmd_taxonomy)

    o = sub.add_parser("oracle-compare", help="compare checker and reference evaluator")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--count", type=int, default=1000)
    common(o)
    o.set_defaults(func=cmd_oracle_compare)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
