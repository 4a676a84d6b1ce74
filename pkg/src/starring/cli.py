"""Command-line front end.

Subcommands: invert, classify, verify, enumerate, theorems.  Exit codes are
stable: 0 clean, 1 a verification sweep found counterexamples, 2 usage or
parse errors.  All output uses the same scalar grammar the parsers accept,
so printed matrices can be fed straight back in.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify
from .geninv import InverseBundle
from .harness import (
    GeneratorSpec,
    InvalidSpecError,
    Mode,
    UnknownEntryError,
    generate,
    sweep,
)
from .matrix import Matrix, MatrixParseError, parse_inline, parse_matrix
from .starfield import (
    FieldDescriptor,
    FieldKind,
    ScalarParseError,
    is_prime,
)
from .theorems import LEMMA_STATEMENTS, registry


class UsageError(ValueError):
    pass


def parse_ring(token: str) -> FieldDescriptor:
    """Ring flags: q, qi, f<p>, f<p>2 (e.g. f3 is F_3 and f32 is F_9)."""
    if token == "q":
        return FieldDescriptor.get(FieldKind.RATIONAL)
    if token == "qi":
        return FieldDescriptor.get(FieldKind.GAUSSIAN_RATIONAL)
    if token.startswith("f") and token[1:].isdigit():
        digits = token[1:]
        if is_prime(int(digits)):
            return FieldDescriptor.get(FieldKind.PRIME, int(digits))
        if digits.endswith("2") and digits[:-1] and is_prime(int(digits[:-1])):
            return FieldDescriptor.get(FieldKind.QUAD_EXT, int(digits[:-1]))
    raise UsageError(f"unknown ring {token!r} (expected q, qi, f<p> or f<p>2)")


def _read_matrix(args) -> Matrix:
    if args.infile:
        if args.infile == "-":
            text = sys.stdin.read()
        else:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        return parse_matrix(text)
    if args.matrix:
        if not args.ring:
            raise UsageError("inline --matrix needs --ring")
        return parse_inline(parse_ring(args.ring), args.matrix)
    raise UsageError("need --in FILE or --matrix 'a b; c d'")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _matrix_block(m: Matrix | None) -> str:
    return m.to_text() if m is not None else "does not exist"


def cmd_invert(args) -> int:
    a = _read_matrix(args)
    bundle = InverseBundle.compute(a)
    if args.format == "json":
        payload = {
            "ring": a.field.kind.value,
            "p": a.field.p,
            "dim": a.n,
            "input": a.to_tokens(),
            "mpInverse": bundle.mp.to_tokens() if bundle.has_mp else None,
            "groupInverse": bundle.group.to_tokens() if bundle.has_group else None,
            "hasMpInverse": bundle.has_mp,
            "hasGroupInverse": bundle.has_group,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        parts = [
            "input:", a.to_text(), "",
            "mp_inverse:", _matrix_block(bundle.mp), "",
            "group_inverse:", _matrix_block(bundle.group),
        ]
        _emit("\n".join(parts), args.out)
    return 0


def cmd_classify(args) -> int:
    a = _read_matrix(args)
    c = classify(InverseBundle.compute(a))
    fields = [
        ("projection", c.is_projection),
        ("ep", c.is_ep),
        ("pi", c.is_pi),
        ("sep", c.is_sep),
        ("mp_invertible", c.mp_invertible),
        ("group_invertible", c.group_invertible),
    ]
    if args.format == "json":
        _emit(json.dumps(dict(fields), indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join(f"{k}: {str(v).lower()}" for k, v in fields), args.out)
    return 0


def _build_spec(args) -> GeneratorSpec:
    if not args.ring:
        raise UsageError("--ring is required")
    if not args.dim:
        raise UsageError("--dim is required")
    field = parse_ring(args.ring)
    if args.exhaustive:
        return GeneratorSpec(Mode.EXHAUSTIVE, field, args.dim)
    if args.random:
        mode = Mode.RANDOM
    else:
        mode = {
            "sep": Mode.CONSTRUCTED_SEP,
            "ep": Mode.CONSTRUCTED_EP,
            "pi": Mode.CONSTRUCTED_PI,
        }[args.constructed]
    return GeneratorSpec(mode, field, args.dim,
                         sample_count=args.count, seed=args.seed)


def _verify_text(report) -> str:
    lines = [f"ring {report.spec.field.name} dim {report.spec.dim} "
             f"mode {report.spec.mode.value}"]
    t = report.totals
    lines.append(
        f"elements {t['generated']} | mp {t['mpInvertible']} "
        f"| group {t['groupInvertible']} | both {t['bothInvertible']} "
        f"| sep {t['sep']}")
    for tid in sorted(report.per_theorem):
        tt = report.per_theorem[tid]
        lines.append(f"{tid:<7} checked {tt['checked']:<6} "
                     f"consistent {tt['consistent']:<6} "
                     f"counterexamples {len(tt['counterexamples'])}")
    for tid in sorted(report.informational):
        tt = report.informational[tid]
        lines.append(f"{tid:<7} checked {tt['checked']:<6} "
                     f"agreeing {tt['agreeing']:<6} (informational)")
    for lid in sorted(report.lemmas):
        lt = report.lemmas[lid]
        extra = f" vacuous {lt['vacuous']:<6}" if "vacuous" in lt else ""
        lines.append(f"{lid:<7} checked {lt['checked']:<6}{extra} "
                     f"violations {len(lt['violations'])}")
    n = report.counterexample_count()
    lines.append("counterexamples: none" if n == 0 else f"counterexamples: {n}")
    lines.append(f"wall time: {report.wall_time}s")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    spec = _build_spec(args)
    entry_ids = [s.strip() for s in args.entries.split(",") if s.strip()]
    report = sweep(spec, entry_ids or "all")
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        _emit(_verify_text(report), args.out)
    return 0 if report.counterexample_count() == 0 else 1


def cmd_enumerate(args) -> int:
    spec = _build_spec(args)
    spec.validate()
    elements = list(generate(spec))
    if args.format == "json":
        payload = {
            "spec": spec.echo(),
            "elements": [m.to_tokens() for m in elements],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n\n".join(m.to_text() for m in elements), args.out)
    return 0


def cmd_theorems(args) -> int:
    entries = registry()
    if args.section:
        entries = [e for e in entries if e.section == args.section]
    if args.format == "json":
        payload = {
            "entries": [
                {"id": e.id, "kind": e.kind.value, "gated": e.gated,
                 "statement": e.statement}
                for e in entries
            ],
            "lemmas": [{"id": lid, "statement": s}
                       for lid, s in sorted(LEMMA_STATEMENTS.items())],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        return 0
    width = max(len(e.id) for e in entries) if entries else 4
    lines = [f"{e.id:<{width}}  {e.statement}" for e in entries]
    if not args.section:
        lines += [f"{lid:<{width}}  {stmt}"
                  for lid, stmt in sorted(LEMMA_STATEMENTS.items())]
    _emit("\n".join(lines), args.out)
    return 0


def _add_io_flags(p):
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", metavar="PATH", help="write output to a file")


def _add_matrix_flags(p):
    p.add_argument("--in", dest="infile", metavar="PATH",
                   help="matrix file in the text format ('-' for stdin)")
    p.add_argument("--matrix", metavar="ROWS",
                   help="inline matrix, semicolon-separated rows")
    p.add_argument("--ring", metavar="RING",
                   help="q | qi | f<p> | f<p>2 (needed with --matrix)")


def _add_generator_flags(p):
    p.add_argument("--ring", metavar="RING", help="q | qi | f<p> | f<p>2")
    p.add_argument("--dim", type=int, metavar="N")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    mode.add_argument("--constructed", choices=["sep", "ep", "pi"])
    p.add_argument("--seed", type=int, metavar="S")
    p.add_argument("--count", type=int, default=0, metavar="K")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starring",
        description="Exact generalized inverses and strongly-EP verification "
                    "in matrix *-rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invert", help="print the MP and group inverse")
    _add_matrix_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("classify", help="projection/EP/PI/SEP membership")
    _add_matrix_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="sweep theorem entries over a stream")
    _add_generator_flags(p)
    p.add_argument("--entries", default="all",
                   help="comma-separated entry IDs, or 'all'")
    _add_io_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="print the generated element stream")
    _add_generator_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("theorems", help="list the theorem registry")
    p.add_argument("--section", choices=["2", "3", "4", "5", "x"])
    _add_io_flags(p)
    p.set_defaults(func=cmd_theorems)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MatrixParseError, ScalarParseError,
            InvalidSpecError, UnknownEntryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
