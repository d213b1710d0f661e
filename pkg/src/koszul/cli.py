"""Command-line driver.

    koszul verify  --suite all --half-dim 1,2 --degree 3 --trials 25 --seed 7
    koszul eval    --symplectic 1 --apply delta "v1 dx2"
    koszul bracket --symplectic 1 --arity 2 "v1 dx2" "1/2 v1^2 dx2"

Exit codes: 0 all checks pass, 1 at least one identity failure, 2 usage or
expression errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from .brackets import l_bracket
from .campaign import SUITES, CampaignConfig, run_campaign
from .forms import d
from .grammar import FormSyntaxError, parse_form, render_form
from .symplectic import SymplecticSpace
from .volume import VolumeSpace, volume_family

USAGE_ERROR = 2


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="koszul", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run a verification campaign")
    pv.add_argument("--suite", default="all", choices=SUITES)
    pv.add_argument("--half-dim", type=_int_list, default=(1, 2), metavar="N[,N...]",
                    help="half-dimensions for symplectic suites (default 1,2)")
    pv.add_argument("--volume-dim", type=_int_list, default=(3, 4), metavar="M[,M...]",
                    help="dimensions for the volume suite (default 3,4)")
    pv.add_argument("--degree", type=int, default=3, help="max polynomial degree of random inputs")
    pv.add_argument("--density", type=float, default=0.7, help="basis-term density of random forms")
    pv.add_argument("--trials", type=int, default=25)
    pv.add_argument("--seed", type=int, default=7)
    pv.add_argument("--arity-max", type=int, default=5, help="highest identity arity to check")
    pv.add_argument("--k-max", type=int, default=9, help="coefficient recursion bound")
    pv.add_argument("--format", dest="fmt", default="text", choices=("text", "json"))
    pv.add_argument("--out", default=None, help="write the report to a file instead of stdout")

    pe = sub.add_parser("eval", help="parse a form and apply operators")
    pe.add_argument("--symplectic", type=int, default=None, metavar="N",
                    help="half-dimension; enables delta, L, Lambda, H")
    pe.add_argument("--dim", type=int, default=None, metavar="M",
                    help="plain dimension (d only); inferred from the expression if omitted")
    pe.add_argument("--apply", action="append", default=[], choices=("d", "delta", "L", "Lambda", "H"),
                    metavar="OP", help="operator to apply; repeat to compose left to right")
    pe.add_argument("expr")

    pb = sub.add_parser("bracket", help="evaluate a bracket of the symplectic or volume family")
    group = pb.add_mutually_exclusive_group(required=True)
    group.add_argument("--symplectic", type=int, default=None, metavar="N")
    group.add_argument("--volume", type=int, default=None, metavar="M")
    pb.add_argument("--arity", type=int, required=True)
    pb.add_argument("forms", nargs="+")
    return parser


def _infer_dim(expr: str) -> int:
    indices = [int(m.group(1)) for m in re.finditer(r"(?:dx|v)(\d+)", expr)]
    return max(indices, default=2)


def cmd_verify(args) -> int:
    cfg = CampaignConfig(
        suite=args.suite,
        half_dims=args.half_dim,
        volume_dims=args.volume_dim,
        max_degree=args.degree,
        density=args.density,
        trials=args.trials,
        seed=args.seed,
        arity_max=args.arity_max,
        k_max=args.k_max,
        fmt=args.fmt,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    report = run_campaign(cfg)
    rendered = report.to_json() if cfg.fmt == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    if cfg.fmt == "json":
        # kept out of the report payload so identical configs stay byte-identical
        print(f"completed in {report.duration_s:.2f}s", file=sys.stderr)
    return 0 if report.failed == 0 else 1


def cmd_eval(args) -> int:
    if args.symplectic is not None:
        space = SymplecticSpace(args.symplectic)
        dim = space.dim
    else:
        space = None
        dim = args.dim if args.dim is not None else _infer_dim(args.expr)
    try:
        form = parse_form(args.expr, dim)
    except FormSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for op in args.apply:
        if op == "d":
            form = d(form)
            continue
        if space is None:
            print(f"error: operator {op} needs --symplectic", file=sys.stderr)
            return USAGE_ERROR
        if op == "delta":
            form = space.delta(form)
        elif op == "L":
            form = space.L(form)
        elif op == "Lambda":
            form = space.Lam(form)
        elif op == "H":
            form = space.H(form)
    print(render_form(form))
    return 0


def cmd_bracket(args) -> int:
    k = args.arity
    if args.symplectic is not None:
        s = SymplecticSpace(args.symplectic)
        dim, ground, top = s.dim, 1, s.dim
    else:
        v = VolumeSpace(args.volume)
        dim, ground, top = v.m, v.m - 2, v.m - 2
    if len(args.forms) != k:
        print(f"error: arity {k} needs exactly {k} forms, got {len(args.forms)}", file=sys.stderr)
        return USAGE_ERROR
    try:
        forms = [parse_form(text, dim) for text in args.forms]
    except FormSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if k == 1:
        lo, hi = (1, top) if args.symplectic is not None else (0, top)
        for f in forms:
            if not lo <= f.degree <= hi:
                print(f"error: degree {f.degree} outside the complex [{lo}, {hi}]", file=sys.stderr)
                return USAGE_ERROR
    else:
        for f in forms:
            if f.degree != ground and not f.is_zero():
                print(f"error: arity {k} bracket takes degree-{ground} forms, got degree {f.degree}",
                      file=sys.stderr)
                return USAGE_ERROR
    if args.symplectic is not None:
        result = l_bracket(s, k, forms).form
    else:
        fam = volume_family(v)
        result = fam.l(k, [fam.element(f) for f in forms]).form
    print(render_form(result))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "eval":
        return cmd_eval(args)
    return cmd_bracket(args)


if __name__ == "__main__":
    sys.exit(main())
