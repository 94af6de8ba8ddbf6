"""JSON command-line front end.

Every subcommand prints exactly one JSON document on stdout.  Validation
problems exit with status 2 and an ``{"error": ...}`` object.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import determinantal, ideals, kernels, peter_weyl
from .partitions import Partition, as_partition
from .poly import TriplePars, conical_poly, tripotent, vanishing_order


class ValidationError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    try:
        parts = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValidationError(f"cannot parse partition {text!r}") from exc
    if not isinstance(parts, list):
        raise ValidationError(f"partition must be a list, got {text!r}")
    return as_partition(parts)


def parse_generators(text: str) -> list[Partition]:
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise ValidationError(f"--gens must be a JSON list of lists: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(g, list) for g in data):
        raise ValidationError("--gens must be a JSON list of lists")
    return [as_partition(g) for g in data]


def parse_point(text: str, pars: TriplePars):
    text = text.strip()
    if text.startswith("e") and text[1:].isdigit():
        return tripotent(int(text[1:]), pars)
    try:
        rows = json.loads(text)
        return [[Fraction(str(x)) for x in row] for row in rows]
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"--point must be e<j> or a JSON matrix, got {text!r}") from exc


def _ideal_from_args(args) -> ideals.IdealSupport:
    if args.ideal is not None:
        try:
            data = json.loads(args.ideal)
        except ValueError as exc:
            raise ValidationError(f"--ideal is not valid JSON: {exc}") from exc
        return ideals.IdealSupport.from_json(data)
    if args.rank is None or args.gens is None:
        raise ValidationError("give either --ideal or both --rank and --gens")
    return ideals.minimal_full_set(parse_generators(args.gens), rank=args.rank)


def _nonneg(name: str, value: int) -> int:
    if value < 0:
        raise ValidationError(f"--{name} must be nonnegative")
    return value


def _pars(args) -> TriplePars:
    if args.r < 1 or args.s < args.r:
        raise ValidationError(f"need 1 <= r <= s, got r={args.r}, s={args.s}")
    return TriplePars(args.r, args.s)


# -- subcommands --------------------------------------------------------------

def cmd_minimal_set(args) -> dict:
    ideal = ideals.minimal_full_set(parse_generators(args.gens), rank=args.rank)
    return {**ideal.to_json(), "zero_ideal": ideal.is_zero}


def cmd_determinantal(args) -> dict:
    return determinantal.compare_with_reference(parse_partition(args.nu))


def cmd_step1(args) -> dict:
    ideal = determinantal.step1_generators(args.l, _nonneg("n", args.n), args.r)
    return ideal.to_json()


def cmd_localize(args) -> dict:
    ideal = _ideal_from_args(args)
    return {"source": ideal.to_json(), **ideals.localize(ideal, args.l).to_json()}


def cmd_max_fibre(args) -> dict:
    ideal = _ideal_from_args(args)
    return {"rank": ideal.rank, "fibre": [list(p) for p in ideals.maximal_fibre(ideal)]}


def cmd_vanishing_order(args) -> dict:
    pars = _pars(args)
    lam = parse_partition(args.lam)
    point = parse_point(args.point, pars)
    out = {"order": vanishing_order(conical_poly(lam, pars), point)}
    if args.point.startswith("e"):
        out["tail_sum"] = determinantal.order_on_stratum(lam, int(args.point[1:]))
    return out


def cmd_verify_kernel(args) -> dict:
    pars = _pars(args)
    if args.samples < 1:
        raise ValidationError("--samples must be positive")
    report = peter_weyl.verify_shift_identity(
        parse_partition(args.lam), _nonneg("n", args.n), pars, args.samples, args.seed, args.tol
    )
    return report.to_json()


def cmd_k_expansion(args) -> dict:
    if args.coeffs == "flat":
        coeffs = kernels.flat_coeffs
    else:
        if args.c is None:
            raise ValidationError(f"--coeffs {args.coeffs} needs --c")
        c = Fraction(args.c)
        coeffs = kernels.pochhammer_coeffs(c) if args.coeffs == "pochhammer" else kernels.inverse_pochhammer_coeffs(c)
    exp = kernels.k_s_expansion(coeffs, parse_partition(args.lam), args.s, args.N)
    return {"rank": exp.rank, "weight_bound": exp.weight_bound, "coefficients": exp.to_json()}


def cmd_peter_weyl_dim(args) -> dict:
    pars = _pars(args)
    basis = peter_weyl.span_basis(parse_partition(args.lam), pars, args.seed, args.tol)
    return {"lambda": list(basis.lam), "d_lambda": basis.dim, "certificates": basis.certificate()}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stratmod", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("minimal-set", cmd_minimal_set, "minimal antichain of a generating set")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--gens", required=True, help='JSON, e.g. "[[2,1],[2,2]]"')

    p = add("determinantal", cmd_determinantal, "minimal partitions of a joint symbolic power")
    p.add_argument("--nu", required=True, help="decreasing orders, e.g. 10,5,1")

    p = add("step1", cmd_step1, "generators of the order-n ideal of the rank<=l variety")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    for name, func, help_ in (("localize", cmd_localize, "support localized at a rank-l tripotent"),
                              ("max-fibre", cmd_max_fibre, "Peter-Weyl types of the fibre at 0")):
        p = add(name, func, help_)
        p.add_argument("--ideal", help='JSON {"rank": r, "generators": [...]}')
        p.add_argument("--rank", type=int)
        p.add_argument("--gens")
        if name == "localize":
            p.add_argument("--l", type=int, required=True)

    p = add("vanishing-order", cmd_vanishing_order, "exact vanishing order of N^lambda at a point")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--point", required=True, help="e<j> or a JSON matrix of rationals")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = add("verify-kernel", cmd_verify_kernel, "check the determinant shift identity numerically")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("k-expansion", cmd_k_expansion, "coefficients of the stratified kernel K^s")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--coeffs", choices=["flat", "pochhammer", "inverse-pochhammer"], default="flat")
    p.add_argument("--c", help="rational parameter for the Pochhammer coefficients")

    p = add("peter-weyl-dim", cmd_peter_weyl_dim, "certified dimension of a Peter-Weyl component")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    pretty = False
    try:
        args = parser.parse_args(argv)
        pretty = args.pretty
        if args.command is None:
            raise ValidationError("a subcommand is required")
        inputs = {("lambda" if k == "lam" else k): v for k, v in vars(args).items()
                  if k not in ("func", "pretty", "command")}
        payload = {"command": args.command, "inputs": inputs, **args.func(args)}
        code = 0
    except (ValidationError, ValueError, IndexError) as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 2
    except (RuntimeError, ZeroDivisionError) as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 1
    json.dump(payload, stdout, indent=2 if pretty else None)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run())
