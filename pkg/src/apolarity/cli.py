"""Command-line front end: ``apolarity <command> [options]``.

Output is a JSON report by default (``--text`` for plain tables).  Exit
status is 0 on success, 1 on a domain error or a failed verification, and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import apolar, graded, rank, ring
from .parse import PolySyntaxError, parse_list, parse_poly
from .verify import verify_paper


class DomainError(Exception):
    pass


def _field_arg(text: str):
    try:
        return ring.field_from_tag(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _jsonable(v):
    if isinstance(v, ring.Poly):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _check_char(F: ring.Poly):
    p = F.field.characteristic
    if p and p <= F.degree:
        raise DomainError(f"prime {p} must exceed the degree {F.degree}")


def _linear(text: str, F: ring.Poly) -> ring.Poly:
    l = parse_poly(text, F.field, F.nvars)
    if l.side != "x" or not l.is_linear_form():
        raise DomainError(f"{text!r} is not a nonzero linear form in x0..x{F.nvars - 1}")
    return l


# ---------------------------------------------------------------------------
# handlers: (F or None, args) -> dict


def cmd_hilbert(F, args):
    h = apolar.hilbert_function(F, args.action)
    return {"hilbert": list(h), "symmetric": h == h[::-1]}


def cmd_annih(F, args):
    piece = apolar.annihilator_piece(F, args.k, args.action)
    return {"k": args.k, "dim": piece.dim, "basis": [str(p) for p in piece.basis]}


def cmd_catalecticant(F, args):
    M = apolar.catalecticant(F, args.k, args.action)
    fmt = lambda side, e: str(ring.Poly.monomial(e, 1, F.field, side))
    return {
        "k": args.k,
        "rank": M.rank(),
        "columns": [fmt("y", e) for e in ring.exponents_of_degree(F.nvars, args.k)],
        "rows": [fmt("x", e) for e in ring.exponents_of_degree(F.nvars, F.degree - args.k)],
        "matrix": [[_jsonable(v) for v in r] for r in M.rows],
    }


def cmd_diff(F, args):
    l = _linear(args.l, F)
    f, _ = ring.dehomogenize(F, l)
    D = apolar.diff_space(f)
    return {"l": str(l), "f": str(f), "dim": D.dim, "basis": [str(p) for p in D.basis]}


def cmd_gamma(F, args):
    s = apolar.gamma_scheme(F, _linear(args.l, F))
    return {
        "l": str(s.l),
        "f": str(s.f),
        "length": s.length,
        "verified": s.verified,
        "generators": [str(g) for g in s.generators],
    }


def cmd_cactus_bound(F, args):
    cb = rank.cactus_upper_bound(F, extra=args.extra_candidates, seed=args.seed)
    return {"bound": cb.bound, "witness": str(cb.witness),
            "lengths": [[str(l), n] for l, n in cb.lengths]}


def cmd_ldiff(F, args):
    return {"ldiff": rank.diff_length(F), "hilbert": list(apolar.hilbert_function(F))}


def cmd_report(F, args):
    return rank.rank_report(F, extra=args.extra_candidates, seed=args.seed).to_dict()


def cmd_nd_bound(_, args):
    return {"n": args.n, "d": args.d, "nd": rank.nd_bound(args.n, args.d)}


def cmd_generic_rank(_, args):
    g = rank.generic_rank(args.n, args.d)
    return {"n": args.n, "d": args.d, "value": g.value, "exceptional": g.exceptional,
            "convention": g.convention}


def cmd_secant_dim(_, args):
    dim = rank.secant_dimension(args.n, args.d, args.r, args.seed)
    exp = rank.expected_secant_dimension(args.n, args.d, args.r)
    return {"n": args.n, "d": args.d, "r": args.r, "dimension": dim, "expected": exp,
            "defect": exp - dim}


def cmd_decompose(F, args):
    pts = parse_list(args.points, F.field, F.nvars)
    res = apolar.decompose_check(F, pts)
    return {"points": [str(p) for p in pts], "success": res.success,
            "coefficients": _jsonable(list(res.coefficients)) if res.coefficients else None,
            "containment": list(res.containment)}


def cmd_check_apolar(F, args):
    gens = parse_list(args.ideal, F.field, F.nvars)
    if any(g.side != "y" for g in gens):
        raise DomainError("ideal generators must be operators in y0..yN")
    rows = [[str(g), apolar.apply_op(g, F).is_zero()] for g in gens]
    return {"apolar": all(r[1] for r in rows), "generators": rows}


def cmd_empty(_, args):
    gens = parse_list(args.gens, args.field, args.nvars)
    if not gens or any(g.side != "y" for g in gens):
        raise DomainError("generators must be operators in y0..yN")
    res = graded.empty_projective(gens, args.tmax)
    return {"certified": res.certified, "degree": res.degree,
            "quotient_dims": [list(r) for r in res.quotient_dims]}


def cmd_remark2(F, args):
    rep = apolar.remark2_check(F, _linear(args.l, F), args.e)
    return {
        "cofactor": str(rep.cofactor),
        "doubled_form": str(rep.doubled_form),
        "generators": [str(g) for g in rep.generators.basis],
        "kills_power": rep.kills_power,
        "rows": [{"t": t, "dim_J": a, "dim_H": b, "contained": c} for t, a, b, c in rep.rows],
        "agreement_degree": rep.agreement_degree,
    }


def cmd_random(_, args):
    return {"poly": str(ring.random_form(args.n, args.d, args.seed, args.field))}


COMMANDS = {
    "hilbert": (cmd_hilbert, True),
    "annih": (cmd_annih, True),
    "catalecticant": (cmd_catalecticant, True),
    "diff": (cmd_diff, True),
    "gamma": (cmd_gamma, True),
    "cactus-bound": (cmd_cactus_bound, True),
    "ldiff": (cmd_ldiff, True),
    "report": (cmd_report, True),
    "nd-bound": (cmd_nd_bound, False),
    "generic-rank": (cmd_generic_rank, False),
    "secant-dim": (cmd_secant_dim, False),
    "decompose": (cmd_decompose, True),
    "check-apolar": (cmd_check_apolar, True),
    "empty": (cmd_empty, False),
    "remark2": (cmd_remark2, True),
    "random": (cmd_random, False),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=ring.QQ,
                        help="'q' (default) or 'p:<prime>'")
    common.add_argument("--seed", type=int, default=0)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="text", action="store_false", help="JSON report (default)")
    out.add_argument("--text", dest="text", action="store_true", help="plain text")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing")
    common.set_defaults(text=False)

    polyarg = argparse.ArgumentParser(add_help=False)
    src = polyarg.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="inline polynomial, e.g. 'x0^3 + x1^3'")
    src.add_argument("--file", help="one polynomial per line; '#' starts a comment")
    polyarg.add_argument("--nvars", type=int, help="number of variables (default: inferred)")

    action = argparse.ArgumentParser(add_help=False)
    action.add_argument("--action", choices=ring.ACTIONS, default="differentiation")

    parser = argparse.ArgumentParser(prog="apolarity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *parents, help=None):
        return sub.add_parser(name, parents=[common, *parents], help=help)

    add("hilbert", polyarg, action, help="Hilbert function of T/F^perp")
    p = add("annih", polyarg, action, help="degree-k piece of F^perp")
    p.add_argument("--k", type=int, required=True)
    p = add("catalecticant", polyarg, action, help="catalecticant matrix T_k -> S_(d-k)")
    p.add_argument("--k", type=int, required=True)
    p = add("diff", polyarg, help="Diff space of the dehomogenization F_l")
    p.add_argument("--l", required=True)
    p = add("gamma", polyarg, help="the apolar scheme Gamma(F_l)")
    p.add_argument("--l", required=True)
    for name in ("cactus-bound", "report"):
        p = add(name, polyarg, help="cactus rank upper bound" if name == "cactus-bound" else "rank bracket")
        p.add_argument("--extra-candidates", type=int, default=8)
    add("ldiff", polyarg, help="differential length")
    for name in ("nd-bound", "generic-rank"):
        p = add(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
    p = add("secant-dim", help="Terracini dimension of the r-th secant variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = add("decompose", polyarg, help="solve F = sum c_i l_i^d and check apolarity")
    p.add_argument("--points", required=True, help="comma-separated linear forms")
    p = add("check-apolar", polyarg, help="do the given operators annihilate F?")
    p.add_argument("--ideal", required=True, help="comma-separated operators in y0..yN")
    p = add("empty", help="certify that homogeneous operators have no common zero")
    p.add_argument("--gens", required=True)
    p.add_argument("--tmax", type=int)
    p.add_argument("--nvars", type=int)
    p = add("remark2", polyarg, help="compare (l^(d-e) F')^perp with Gamma(F_l)")
    p.add_argument("--l", required=True)
    p.add_argument("--e", type=int, required=True)
    p = add("random", help="seeded random form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = sub.add_parser("verify-paper", help="run the reproduction suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=4)
    return parser


def _read_polys(args) -> list[str]:
    if args.poly is not None:
        return [args.poly]
    with open(args.file) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [ln for ln in lines if ln]


def _inputs(args) -> dict:
    skip = {"command", "text", "timing", "field"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _emit_text(doc, out):
    print(f"# {doc['command']}  field={doc['field']} seed={doc['seed']}", file=out)

    def show(res, indent=""):
        for k, v in res.items():
            if isinstance(v, list) and v and isinstance(v[0], (list, dict)):
                print(f"{indent}{k}:", file=out)
                for row in v:
                    print(f"{indent}  {row}", file=out)
            elif isinstance(v, list):
                print(f"{indent}{k}: {', '.join(map(str, v))}", file=out)
            else:
                print(f"{indent}{k}: {v}", file=out)

    results = doc["results"]
    if isinstance(results, list):
        for item in results:
            print(f"[{item['poly']}]", file=out)
            show(item["result"], "  ")
    else:
        show(results)
    if "timing" in doc:
        print(f"seconds: {doc['timing']:.3f}", file=out)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-paper":
        results = verify_paper(args.seed, args.n_max, out=lambda s: print(s, file=out))
        return 0 if all(r.passed for r in results) else 1

    handler, needs_poly = COMMANDS[args.command]
    t0 = time.perf_counter()
    try:
        if needs_poly:
            results = []
            for text in _read_polys(args):
                F = parse_poly(text, args.field, args.nvars)
                if F.side != "x":
                    raise DomainError(f"{text!r}: expected a form in x0..xN")
                _check_char(F)
                results.append({"poly": str(F), "result": handler(F, args)})
            payload = results[0]["result"] if args.poly is not None else results
        else:
            payload = handler(None, args)
    except (DomainError, PolySyntaxError, ValueError, ZeroDivisionError, apolar.ApolarityError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {
        "command": args.command,
        "inputs": _jsonable(_inputs(args)),
        "field": args.field.tag,
        "seed": args.seed,
        "results": _jsonable(payload),
    }
    if args.timing:
        doc["timing"] = time.perf_counter() - t0
    if args.text:
        _emit_text(doc, out)
    else:
        print(json.dumps(doc, indent=2), file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
