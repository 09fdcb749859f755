"""Command-line front end.

Verbs: ``check``, ``minor``, ``flacets``, ``catalog``, ``enumerate``,
``verify-theorem`` and ``polytope``.  Wherever a matroid is expected, a
catalog name (``U_2_4``, ``MW2``, ``S0`` ... ``S4``) or a path to a matroid
file may be given.

Exit codes: 0 success, 1 a mathematical mismatch, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import textio
from .core import components, elements, flats, format_set, is_connected
from .enumeration import catalog_shards, write_shard
from .errors import MatroidError, UnknownName
from .minors import has_minor
from .named import catalog
from .polytope import crosscheck_flacets, flat_face_dim, polytope_dim
from .split import is_split
from .theorem import verify_theorem


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _resolve(arg: str):
    try:
        return catalog(arg)
    except UnknownName:
        pass
    path = Path(arg)
    if not path.is_file():
        raise UsageError(f"{arg}: neither a known matroid name nor a readable file")
    try:
        return textio.load(path)
    except MatroidError as exc:
        raise UsageError(f"{arg}: {exc}") from None


def _header(args, m, label):
    if args.quiet or args.format == "json":
        return []
    return [f"# {label}: n={m.n} r={m.r} bases={len(m.bases)}"]


def _emit(args, lines, payload):
    if args.format == "json":
        return json.dumps(payload, sort_keys=True)
    return "\n".join(lines)


def _cmd_check(args):
    m = _resolve(args.matroid)
    report = is_split(m)
    text = _emit(args, _header(args, m, args.matroid) + [report.to_text()], report.to_dict())
    return 0, text


def _cmd_minor(args):
    host = _resolve(args.matroid)
    target = _resolve(args.target)
    w = has_minor(host, target)
    line = w.to_text() if w is not None else "NONE"
    payload = {"target": args.target, "witness": w.to_dict() if w is not None else None}
    return 0, _emit(args, _header(args, host, args.matroid) + [line], payload)


def _cmd_flacets(args):
    m = _resolve(args.matroid)
    if m.n == 0 or not is_connected(m):
        raise UsageError(f"{args.matroid}: flacets are defined for connected matroids only")
    report = crosscheck_flacets(m)
    code = 0 if report.agree else 1
    return code, _emit(args, _header(args, m, args.matroid) + [report.to_text()], report.to_dict())


def _cmd_catalog(args):
    m = _resolve(args.name)
    if args.format == "json":
        return 0, json.dumps(
            {"n": m.n, "r": m.r, "bases": [list(elements(b)) for b in m.bases]}, sort_keys=True
        )
    return 0, textio.dumps(m, compact=args.compact).rstrip("\n")


def _cmd_enumerate(args):
    shards = catalog_shards(args.n, jobs=args.jobs, cache_dir=args.cache)
    counts = [f"N={s.n} R={s.r} COUNT={len(s)}" for s in shards]
    members = [m for s in shards for m in s.members]
    if args.format == "json":
        payload = {
            "n": args.n,
            "counts": {str(s.r): len(s) for s in shards},
            "matroids": [
                {"n": m.n, "r": m.r, "bases": [list(elements(b)) for b in m.bases]}
                for m in members
            ],
        }
        if args.out:
            Path(args.out).write_text(textio.dumps_many(members))
        return 0, json.dumps(payload, sort_keys=True)
    if args.out:
        Path(args.out).write_text(textio.dumps_many(members))
        return 0, "\n".join(counts + [f"TOTAL={len(members)}"])
    return 0, textio.dumps_many(members).rstrip("\n")


def _cmd_verify(args):
    report = verify_theorem(args.max_n, jobs=args.jobs, cache_dir=args.cache, long_running=args.long)
    lines = [] if args.quiet else [f"# verifying excluded minors S0-S4 for n <= {args.max_n}"]
    text = _emit(args, lines + [report.to_text()], report.to_dict())
    return (0 if report.ok else 1), text


def _cmd_polytope(args):
    m = _resolve(args.matroid)
    dim = polytope_dim(m)
    comps = len(components(m)) if m.n else 0
    lines = _header(args, m, args.matroid) + [f"POLYTOPE dim={dim} components={comps}"]
    faces = []
    for f in flats(m):
        d = flat_face_dim(m, f)
        facet = comps == 1 and d == dim - 1
        faces.append({"flat": list(elements(f)), "dim": d, "facet": facet})
        lines.append(f"FACE {{{format_set(f)}}} dim={d} facet={'yes' if facet else 'no'}")
    return 0, _emit(args, lines, {"dim": dim, "components": comps, "faces": faces})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--quiet", action="store_true", help="suppress human-oriented headers")

    parser = _Parser(prog="splitmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="decide whether a matroid is split")
    p.add_argument("matroid")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("minor", parents=[common], help="search for a minor with witness")
    p.add_argument("--target", required=True)
    p.add_argument("matroid")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("flacets", parents=[common], help="combinatorial vs geometric flacets")
    p.add_argument("matroid")
    p.set_defaults(func=_cmd_flacets)

    p = sub.add_parser("catalog", parents=[common], help="print a named matroid")
    p.add_argument("name")
    p.add_argument("--compact", action="store_true", help="write a BASES revlex line")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("enumerate", parents=[common], help="all matroids on n elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--cache", help="directory for cached shards")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-theorem", parents=[common], help="exhaustive excluded-minor check")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--cache", help="directory for cached shards")
    p.add_argument("--long", action="store_true", help="allow max-n 9")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("polytope", parents=[common], help="base polytope dimensions")
    p.add_argument("matroid")
    p.set_defaults(func=_cmd_polytope)
    return parser


def run(argv) -> tuple[int, str]:
    """Execute one command; return ``(exit_code, output_text)``."""
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return 2, f"error: {exc}"
    except MatroidError as exc:
        return 2, f"error: {exc}"
    except OSError as exc:
        return 2, f"error: {exc}"


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    if text:
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
