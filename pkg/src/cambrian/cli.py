"""Command-line front end: list sortables, project, verify property suites, render fans."""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .cartan import CartanError
from .coxeter import CoxeterGroup, UnknownGenerator
from .forms import NotCoxeterElement, RankNotThree, coxeter_word
from .groups import CATALOG, load_group
from .render import PROJECTIONS, ProjectionUnavailable, RenderSpec, render_svg
from .sortable import enumerate_sortables, nc, pidown, sorting_word

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _group(args) -> CoxeterGroup:
    try:
        return load_group(args.group)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot load group {args.group!r}: {exc}") from None


def _c(W: CoxeterGroup, text: str | None) -> tuple[int, ...]:
    if text is None:
        return tuple(range(W.n))
    try:
        return coxeter_word(W, text)
    except (NotCoxeterElement, UnknownGenerator) as exc:
        raise UsageError(f"bad Coxeter element {text!r}: {exc}") from None


def _reflection_words(W: CoxeterGroup, roots) -> list[str]:
    return sorted((W.reflection(b).word_str("") for b in roots), key=lambda s: (len(s), s))


def cmd_sortables(args) -> int:
    W = _group(args)
    c = _c(W, args.c)
    rows = []
    for v in enumerate_sortables(W, c, args.max_len):
        rows.append({
            "word": v.word_str(","),
            "length": v.length,
            "cov": _reflection_words(W, v.cover_reflections()),
            "ufs": _reflection_words(W, sorting_word(W, c, v).unforced()),
            "nc": nc(W, c, v).word_str(","),
        })
    if args.format == "json":
        json.dump(rows, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("%-24s %3s  %-28s %-28s %s" % ("word", "len", "cov", "ufs", "nc"))
        for r in rows:
            print("%-24s %3d  %-28s %-28s %s" % (r["word"] or "e", r["length"], " ".join(r["cov"]),
                                                 " ".join(r["ufs"]), r["nc"] or "e"))
    return EXIT_OK


def cmd_pidown(args) -> int:
    W = _group(args)
    c = _c(W, args.c)
    try:
        w = W.from_word(args.word)
    except (UnknownGenerator, ValueError) as exc:
        raise UsageError(f"bad word {args.word!r}: {exc}") from None
    print(pidown(W, c, w).word_str(","))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        W = load_group(args.group)
    except CartanError as exc:
        report = {"group": args.group, "pass": False,
                  "violations": [{"check": "cartan", "error": type(exc).__name__, "detail": str(exc)}]}
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_VIOLATION
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot load group {args.group!r}: {exc}") from None
    cs = [_c(W, args.c)] if args.c else None
    names = checks.SUITES if args.suite == "all" else (args.suite,)
    suites = {}
    for name in names:
        found = checks.run_suite(W, name, cs, args.max_len)
        suites[name] = {"count": len(found), "violations": found}
    ok = all(s["count"] == 0 for s in suites.values())
    json.dump({"group": args.group, "max_len": args.max_len, "pass": ok, "suites": suites},
              sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_render(args) -> int:
    W = _group(args)
    c = _c(W, args.c)
    spec = RenderSpec(projection=args.projection, length_cap=args.max_len,
                      highlight=args.highlight, size=args.size, labels=not args.no_labels)
    try:
        svg = render_svg(W, c, spec)
    except (RankNotThree, ProjectionUnavailable) as exc:
        raise UsageError(str(exc)) from None
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w") as fh:
            fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cambrian",
        description="Sortable elements and Cambrian fans of Coxeter groups.",
        epilog="Groups: a JSON file or one of " + ", ".join(CATALOG) + ".")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, max_len: int):
        p.add_argument("--group", required=True, help="group JSON file or catalog name")
        p.add_argument("--c", help="Coxeter element as a word, e.g. p,q,r (default: generator order)")
        p.add_argument("--max-len", type=int, default=max_len, help="length cap")

    p = sub.add_parser("sortables", help="list c-sortable elements")
    common(p, 10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sortables)

    p = sub.add_parser("pidown", help="the largest c-sortable element below a word")
    common(p, 0)
    p.add_argument("--word", required=True, help='comma-separated word ("" for the identity)')
    p.set_defaults(func=cmd_pidown)

    p = sub.add_parser("verify", help="run property suites; exit 1 on any violation")
    common(p, 6)
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG of a rank-3 Cambrian fan")
    common(p, 8)
    p.add_argument("--projection", choices=PROJECTIONS, default="affine-slice")
    p.add_argument("--highlight", choices=("sortable", "none"), default="sortable")
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cambrian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
