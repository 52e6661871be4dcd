"""Command-line entry point.

Every successful command prints one JSON document (or, for ``compile``, one
S-expression) on stdout. Domain errors print ``{"error": ..., "message": ...}``
and exit 1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .acceptance import run_all
from .algebra import ExtElem, Poly, parse_exppoly, parse_poly
from .config import Config, load_config
from .deps import descent_trace, int_basis_modconst
from .errors import ExppellError


class UsageError(Exception):
    pass
from .logic import Bounds, compile_system, parse_dio, witness_search
from .pell import pell_pair, pell_recognize
from .surface import bc_constant, check_bc_inequality, check_growth_lemma, circle_stats, w_function


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _text_arg(arg: str) -> str:
    """A literal, or the contents of a file when the argument names one."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _poly_list(args: Sequence[str]) -> list[Poly]:
    out = []
    for a in args:
        text = _text_arg(a)
        out.extend(parse_poly(line) for line in text.splitlines() if line.strip())
    return out


def _ext(f: str, g: str) -> ExtElem:
    return ExtElem(parse_exppoly(_text_arg(f)), parse_exppoly(_text_arg(g)))


def _ext_json(e: ExtElem) -> dict:
    return {"f": str(e.f), "g": str(e.g)}


# -- handlers ---------------------------------------------------------------


def cmd_pell(args, cfg: Config) -> int:
    if args.action == "gen":
        _emit(pell_pair(args.n, cfg.pell_index_cap).to_json())
    else:
        x, y = parse_poly(_text_arg(args.x)), parse_poly(_text_arg(args.y))
        sign, n = pell_recognize(x, y, cfg.pell_index_cap)
        _emit({"sign": sign, "index": n})
    return 0


def cmd_algebra(args, cfg: Config) -> int:
    if args.action == "normalize":
        _emit({"value": str(parse_exppoly(_text_arg(args.expr)))})
    elif args.action == "norm":
        _emit({"norm": str(_ext(args.f, args.g).norm())})
    elif args.action == "conj":
        _emit(_ext_json(_ext(args.f, args.g).conj()))
    elif args.action == "ext-mul":
        _emit(_ext_json(_ext(args.f1, args.g1) * _ext(args.f2, args.g2)))
    elif args.action == "ext-pow":
        _emit(_ext_json(_ext(args.f, args.g) ** args.n))
    return 0


def cmd_deps(args, cfg: Config) -> int:
    bs = _poly_list(args.polys)
    if args.action == "check":
        cert = int_basis_modconst(bs)
        _emit({"independent": not cert.relations, **cert.to_json()})
    elif args.action == "basis":
        _emit(int_basis_modconst(bs).to_json())
    else:
        _emit({"steps": [c.to_json() for c in descent_trace(bs)]})
    return 0


def cmd_growth(args, cfg: Config) -> int:
    samples = cfg.samples
    if args.action is None:
        if args.lemma_h is None or args.lemma_r is None:
            raise UsageError("growth needs a subcommand, or both --h and --r")
        args.action, args.h, args.r = "lemma", args.lemma_h, args.lemma_r
    if args.action == "bc":
        _emit({"C": bc_constant(args.n, args.r, args.R)})
    elif args.action == "lemma":
        rep = check_growth_lemma(parse_poly(args.h), args.r, samples)
        _emit({"h": args.h, "r": args.r, **rep.to_json()})
    elif args.action == "bc-check":
        rep = check_bc_inequality(parse_poly(args.h), args.r, args.R, samples=samples)
        _emit({"h": args.h, "r": args.r, "R": args.R, **rep.to_json()})
    else:
        fn = w_function if args.fn == "w" else parse_exppoly(args.fn)
        stats = circle_stats(fn, complex(args.center), args.radius, samples)
        _emit(stats.to_json())
    return 0


def cmd_compile(args, cfg: Config) -> int:
    print(compile_system(parse_dio(args.system)).sentence)
    return 0


def cmd_check(args, cfg: Config) -> int:
    compiled = compile_system(parse_dio(args.system))
    w = witness_search(compiled.sentence, Bounds(cfg.degree, cfg.height, cfg.budget))
    if w is None:
        _emit({"satisfiable_within_bounds": False})
    else:
        _emit({"satisfiable_within_bounds": True, "witness": w.to_json(), "values_at_1": w.at_one()})
    return 0


def cmd_verify_all(args, cfg: Config) -> int:
    results = run_all(cfg)
    if getattr(args, "json", False):
        _emit([{"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3),
                "limit": r.limit, "detail": r.detail} for r in results])
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand from resetting a flag given before it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS, allow_abbrev=False)
    common.add_argument("--degree", type=int, help="search degree bound d")
    common.add_argument("--height", type=int, help="search coefficient bound H")
    common.add_argument("--samples", type=int, help="circle samples per sheet")
    common.add_argument("--tol", dest="tolerance", type=float, help="numeric tolerance, in (0, 1e-3]")
    common.add_argument("--budget", type=int, help="candidate budget of the bounded search")
    common.add_argument("--config", help="key=value configuration file")
    common.add_argument("--json", action="store_true", help="JSON output where a table is the default")

    p = argparse.ArgumentParser(prog="exppell", description=__doc__.splitlines()[0], parents=[common],
                                allow_abbrev=False)
    p.add_argument("--version", action="version", version=f"exppell {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pell = sub.add_parser("pell", parents=[common], allow_abbrev=False, help="Pell solutions over Z[z]")
    psub = pell.add_subparsers(dest="action", required=True)
    gen = psub.add_parser("gen", parents=[common], allow_abbrev=False)
    gen.add_argument("n", type=int)
    rec = psub.add_parser("recognize", parents=[common], allow_abbrev=False)
    rec.add_argument("x")
    rec.add_argument("y")
    pell.set_defaults(func=cmd_pell)

    alg = sub.add_parser("algebra", parents=[common], allow_abbrev=False, help="exponential polynomials and f + g*w")
    asub = alg.add_subparsers(dest="action", required=True)
    asub.add_parser("normalize", parents=[common], allow_abbrev=False).add_argument("expr")
    for name in ("norm", "conj"):
        a = asub.add_parser(name, parents=[common], allow_abbrev=False)
        a.add_argument("f")
        a.add_argument("g")
    mul = asub.add_parser("ext-mul", parents=[common], allow_abbrev=False)
    for name in ("f1", "g1", "f2", "g2"):
        mul.add_argument(name)
    pw = asub.add_parser("ext-pow", parents=[common], allow_abbrev=False)
    pw.add_argument("f")
    pw.add_argument("g")
    pw.add_argument("n", type=int)
    alg.set_defaults(func=cmd_algebra)

    deps = sub.add_parser("deps", parents=[common], allow_abbrev=False, help="linear dependence modulo constants")
    dsub = deps.add_subparsers(dest="action", required=True)
    for name in ("check", "basis", "descent"):
        dsub.add_parser(name, parents=[common], allow_abbrev=False).add_argument(
            "polys", nargs="+", help="polynomials, or files with one per line")
    deps.set_defaults(func=cmd_deps)

    growth = sub.add_parser("growth", parents=[common], allow_abbrev=False,
                            help="growth-lemma numerics; with --h and --r alone, checks the growth lemma")
    growth.add_argument("--h", dest="lemma_h", help="polynomial h for the growth lemma")
    growth.add_argument("--r", dest="lemma_r", type=float, help="radius for the growth lemma")
    gsub = growth.add_subparsers(dest="action")
    bc = gsub.add_parser("bc", parents=[common], allow_abbrev=False)
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--r", type=float, required=True)
    bc.add_argument("--R", type=float, required=True)
    lem = gsub.add_parser("lemma", parents=[common], allow_abbrev=False)
    lem.add_argument("--h", required=True)
    lem.add_argument("--r", type=float, required=True)
    bcc = gsub.add_parser("bc-check", parents=[common], allow_abbrev=False)
    bcc.add_argument("--h", required=True)
    bcc.add_argument("--r", type=float, required=True)
    bcc.add_argument("--R", type=float, required=True)
    circ = gsub.add_parser("circle", parents=[common], allow_abbrev=False)
    circ.add_argument("--fn", default="w", help="'w' or an exponential polynomial in z")
    circ.add_argument("--center", default="0")
    circ.add_argument("--radius", type=float, required=True)
    growth.set_defaults(func=cmd_growth)

    comp = sub.add_parser("compile", parents=[common], allow_abbrev=False, help="Diophantine system to an L_z sentence")
    comp.add_argument("system")
    comp.set_defaults(func=cmd_compile)

    chk = sub.add_parser("check", parents=[common], allow_abbrev=False, help="bounded witness search for a compiled system")
    chk.add_argument("system")
    chk.set_defaults(func=cmd_check)

    va = sub.add_parser("verify-all", parents=[common], allow_abbrev=False, help="run the acceptance suite")
    va.set_defaults(func=cmd_verify_all)
    return p


_CONFIG_FLAGS = ("degree", "height", "samples", "tolerance", "budget")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None), {k: getattr(args, k, None) for k in _CONFIG_FLAGS})
        return args.func(args, cfg)
    except UsageError as e:
        parser.error(str(e))
    except ExppellError as e:
        _emit({"error": type(e).__name__, "message": str(e)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
