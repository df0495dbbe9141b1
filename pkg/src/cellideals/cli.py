"""Command line interface.

Every command prints one report, either as JSON (the default) or as plain
text.  Exit codes: 0 ok, 1 a checked property failed, 2 usage or parse
error, 3 a brute-force oracle hit its size cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import corpus
from .algebra import (
    MonomialOrder,
    buchberger,
    format_binomial,
    parse_binomial,
)
from .constructions import (
    admissible_check,
    chain_compare,
    compute_L,
    cycle_binomials,
    inner_minors,
    reduce_labeling,
)
from .errors import CellIdealError, OracleDisagreement, ParseError, TooLarge
from .grid import CellCollection, build_collection, canonical_form, classify, render, weak_components
from .gridfile import emit_grid, emit_labeling, parse_grid, parse_labeling
from .hilbert import initial_ideal

SCHEMA_VERSION = 1
EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
SURVEY_CELL_CAP = 16


class PropertyFailure(Exception):
    """A report was produced but a checked property does not hold."""

    def __init__(self, report):
        super().__init__("property check failed")
        self.report = report


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

def load_grid(spec: str, top_down: bool = False) -> CellCollection:
    if spec.startswith("corpus:"):
        try:
            return corpus.get(spec.split(":", 1)[1])
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {spec}: {exc.strerror}") from None
    return parse_grid(text, top_down=top_down)


def _v(v) -> list[int]:
    return [v.x, v.y]


def _iv(iv) -> list[list[int]]:
    return [_v(iv.lo), _v(iv.hi)]


def _b(f) -> str:
    return format_binomial(f)


def make_report(command: str, payload: dict, P: CellCollection | None = None, key: str | None = None) -> dict:
    source = emit_grid(P) if P is not None else (key or "")
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_hash": hashlib.sha256(source.encode()).hexdigest(),
        "payload": payload,
    }


def _order_for(P: CellCollection, name: str, cd: str) -> MonomialOrder:
    if name == "stacklex":
        from .stack import stack_frame

        return MonomialOrder.stacklex(P.vertices, stack_frame(P, cd).c)
    return MonomialOrder.by_name(name, P.vertices)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_classify(args) -> dict:
    P = load_grid(args.grid, args.top_down)
    r = classify(P)
    payload = dict(r.flags())
    payload["cells"] = len(P)
    payload["vertices"] = len(P.vertices)
    payload["components"] = [sorted([c.x, c.y] for c in comp.cells) for comp in r.components]
    payload["grid"] = render(P)
    return make_report("classify", payload, P)


def cmd_ideals(args) -> dict:
    P = load_grid(args.grid, args.top_down)
    probes = [parse_binomial(p) for p in args.probe]
    order = MonomialOrder.by_name(args.order, P.vertices)
    r = chain_compare(P, order, probes)
    payload = {
        "case": r.case,
        "chain": r.description,
        "I_eq_L": r.I_eq_L,
        "L_eq_J": r.L_eq_J,
        "I_eq_J": r.I_eq_J,
        "witness_in_L_not_I": _b(r.in_L_not_I) if r.in_L_not_I else None,
        "witness_in_J_not_L": _b(r.in_J_not_L) if r.in_J_not_L else None,
        "order": order.describe(),
    }
    return make_report("ideals compare", payload, P)


def cmd_groebner(args) -> dict:
    P = load_grid(args.grid, args.top_down)
    order = _order_for(P, args.order, args.cd)
    if args.ideal == "I":
        gb = buchberger(inner_minors(P), order)
    elif args.ideal == "L":
        gb = compute_L(P, order)
    else:
        gb = buchberger(cycle_binomials(P), order)
    M = initial_ideal(gb)
    payload = {
        "ideal": args.ideal,
        "order": order.describe(),
        "size": len(gb),
        "max_degree": gb.max_degree(),
        "squarefree_initial_ideal": M.squarefree,
        "basis": [_b(e) for e in gb.elements],
    }
    return make_report("groebner", payload, P)


def cmd_prime(args) -> dict:
    P = load_grid(args.grid, args.top_down)
    r = chain_compare(P)
    payload = {
        "prime": r.I_eq_L,
        "witness": _b(r.in_L_not_I) if r.in_L_not_I else None,
    }
    return make_report("prime", payload, P)


def cmd_labeling(args) -> dict:
    P = load_grid(args.grid, args.top_down)
    alpha = parse_labeling(Path(args.labeling).read_text())
    ok = admissible_check(P, alpha)
    if args.action == "check":
        report = make_report("labeling check", {"admissible": ok}, P)
        if not ok:
            raise PropertyFailure(report)
        return report
    if not ok:
        raise PropertyFailure(make_report("labeling reduce", {"admissible": False}, P))
    r = reduce_labeling(P, alpha, args.budget)
    payload = {
        "admissible": True,
        "status": r.status,
        "explored": r.explored,
        "labeling": emit_labeling(r.labeling),
        "trace": [emit_labeling(a) for a in r.trace],
    }
    return make_report("labeling reduce", payload, P)


def cmd_stack(args) -> dict:
    from .stack import class_group, minimal_primes, stack_prime_gb

    P = load_grid(args.grid, args.top_down)
    try:
        cg = class_group(P, args.cd, check=not args.no_check)
        gb = stack_prime_gb(P, args.cd, check=not args.no_check)
    except OracleDisagreement as exc:
        raise PropertyFailure(make_report("stack analyze", {"error": str(exc)}, P)) from None
    f = cg.frame
    primes = minimal_primes(P, args.cd)
    payload = {
        "bottom": _iv(f.bottom),
        "cd": _iv(f.cd),
        "cd_choices": [_iv(iv) for iv in f.cd_choices],
        "e": [_v(e) for e in f.e_list],
        "m": list(f.m),
        "m_maximal_reading": list(f.m_maximal),
        "n": list(f.n),
        "g_h": [_iv(iv) for iv in f.g_h],
        "class_group_rank": cg.rank,
        "class_group_basis": list(cg.basis),
        "relation": cg.relation,
        "canonical_class": list(cg.canonical),
        "gorenstein": cg.gorenstein,
        "h_vector_symmetric": cg.h_symmetric,
        "minimal_primes": [
            {"label": p.label, "rectangle": _iv(p.rectangle),
             "vanishing": sorted(_v(v) for v in p.vanishing_vertices)}
            for p in primes
        ],
        "groebner_basis_with_xc": [_b(e) for e in gb.elements],
    }
    return make_report("stack analyze", payload, P)


def cmd_oracle(args) -> dict:
    from .oracle import decomposition_cover, kernel_binomials_bounded

    P = load_grid(args.grid, args.top_down)
    if args.action == "cover":
        r = decomposition_cover(P, cd=args.cd, q=args.q)
        payload = {
            "passed": r.passed, "q": r.q, "points": r.points, "covered": r.covered,
            "missing": r.missing, "extra": r.extra,
            "note": "finite-field point equality is a necessary condition only",
        }
        report = make_report("oracle cover", payload, P)
        if not r.passed:
            raise PropertyFailure(report)
        return report
    found = kernel_binomials_bounded(P, args.map, args.degree, coprime_only=args.coprime)
    payload = {"map": args.map, "degree": args.degree, "count": len(found),
               "binomials": [_b(e) for e in found]}
    return make_report("oracle kernel", payload, P)


def enumerate_box(width: int, height: int) -> list[CellCollection]:
    """Weakly connected collections in the box, one per symmetry class."""
    cells = [(x, y) for y in range(1, height + 1) for x in range(1, width + 1)]
    seen = set()
    out = []
    for bits in range(1, 1 << len(cells)):
        chosen = [cells[k] for k in range(len(cells)) if bits >> k & 1]
        P = build_collection(chosen)
        if len(weak_components(P)) != 1:
            continue
        key = canonical_form(P)
        if key in seen:
            continue
        seen.add(key)
        out.append(build_collection(key))
    out.sort(key=lambda P: (len(P), canonical_form(P)))
    return out


def _survey_one(P: CellCollection) -> dict:
    r = chain_compare(P)
    rep = classify(P)
    return {"grid": emit_grid(P), "case": r.case, "I_eq_L": r.I_eq_L,
            "convex": rep.convex, "simple": rep.simple}


def cmd_survey(args) -> dict:
    try:
        w, h = (int(t) for t in args.box.lower().split("x"))
    except ValueError:
        raise ParseError(f"--box expects WxH, got {args.box!r}") from None
    if w < 1 or h < 1:
        raise ParseError("box sides must be positive")
    if w * h > SURVEY_CELL_CAP and not args.unsafe:
        raise TooLarge(f"a {w}x{h} box exceeds {SURVEY_CELL_CAP} cells; pass --unsafe to run it")
    instances = enumerate_box(w, h)
    if args.sample is not None and args.sample < len(instances):
        rng = random.Random(args.seed)
        picked = sorted(rng.sample(range(len(instances)), args.sample))
        instances = [instances[k] for k in picked]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            records = list(pool.map(_survey_one, instances, chunksize=8))
    else:
        records = [_survey_one(P) for P in instances]
    cases = {"1": 0, "2": 0, "3": 0}
    for r in records:
        cases[r["case"]] += 1
    strict_then_equal = [r["grid"] for r in records if r["case"] == "3" and not r["I_eq_L"]]
    payload = {
        "box": f"{w}x{h}",
        "instances": len(records),
        "cases": cases,
        "I_strict_L_eq_J": len(strict_then_equal),
        "I_strict_L_eq_J_examples": strict_then_equal[:10],
        "seed": args.seed,
        "records": records,
    }
    return make_report("survey", payload, key=f"survey {w}x{h} sample={args.sample} seed={args.seed}")


def cmd_corpus(args) -> dict:
    if args.name:
        try:
            P = corpus.get(args.name)
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
        return make_report("corpus", {"name": args.name, "grid": emit_grid(P)}, P)
    return make_report("corpus", {"names": corpus.names()}, key="corpus")


# --------------------------------------------------------------------------
# parser and output
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON report (default)")
    fmt.add_argument("--text", dest="format", action="store_const", const="text", help="plain text report")
    common.add_argument("--top-down", action="store_true", help="first grid line is row y = 1")
    common.set_defaults(format="json")

    parser = argparse.ArgumentParser(prog="cellideals", description="Binomial ideals of collections of cells.")
    sub = parser.add_subparsers(dest="command", required=True)
    grid_help = "grid file, or corpus:NAME"

    p = sub.add_parser("classify", parents=[common], help="convexity, simplicity, stack test")
    p.add_argument("grid", help=grid_help)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ideals", help="compare the ideals I, L and J")
    p2 = p.add_subparsers(dest="action", required=True)
    q = p2.add_parser("compare", parents=[common])
    q.add_argument("grid", help=grid_help)
    q.add_argument("--probe", action="append", default=[], help="binomial to try first as a witness")
    q.add_argument("--order", choices=["lex1", "lex2"], default="lex1")
    q.set_defaults(func=cmd_ideals)

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of I, L or J")
    p.add_argument("grid", help=grid_help)
    p.add_argument("--ideal", choices=["I", "J", "L"], default="I")
    p.add_argument("--order", choices=["lex1", "lex2", "stacklex"], default="lex1")
    p.add_argument("--cd", choices=["left", "right"], default="left", help="[c,d] choice for stacklex")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("prime", parents=[common], help="is I prime (I = L)?")
    p.add_argument("grid", help=grid_help)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("labeling", help="admissible labelings")
    p2 = p.add_subparsers(dest="action", required=True)
    for action in ("check", "reduce"):
        q = p2.add_parser(action, parents=[common])
        q.add_argument("grid", help=grid_help)
        q.add_argument("labeling", help="file with lines 'x y value'")
        q.add_argument("--budget", type=int, default=10_000)
        q.set_defaults(func=cmd_labeling)

    p = sub.add_parser("stack", help="stack polyomino analysis")
    p2 = p.add_subparsers(dest="action", required=True)
    q = p2.add_parser("analyze", parents=[common])
    q.add_argument("grid", help=grid_help)
    q.add_argument("--cd", choices=["left", "right"], default="left")
    q.add_argument("--no-check", action="store_true", help="skip the Buchberger and h-vector cross-checks")
    q.set_defaults(func=cmd_stack)

    p = sub.add_parser("oracle", help="brute-force verifiers")
    p2 = p.add_subparsers(dest="action", required=True)
    q = p2.add_parser("cover", parents=[common])
    q.add_argument("grid", help=grid_help)
    q.add_argument("--q", type=int, choices=[2, 3], default=2)
    q.add_argument("--cd", choices=["left", "right"], default="left")
    q.set_defaults(func=cmd_oracle)
    q = p2.add_parser("kernel", parents=[common])
    q.add_argument("grid", help=grid_help)
    q.add_argument("--map", choices=["phi", "psi"], default="psi")
    q.add_argument("--degree", type=int, choices=[1, 2, 3, 4], default=2)
    q.add_argument("--coprime", action="store_true", help="only pairs without common factor")
    q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("survey", parents=[common], help="chain cases over all collections in a box")
    p.add_argument("--box", required=True, help="WxH, e.g. 3x3")
    p.add_argument("--unsafe", action="store_true", help=f"allow boxes above {SURVEY_CELL_CAP} cells")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sample", type=int, default=None, help="analyze a random subset of this size")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("corpus", parents=[common], help="list or print built-in collections")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus)
    return parser


def _inline(value) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(_inline(v) for v in value) and len(json.dumps(value)) <= 72
    return not (isinstance(value, str) and "\n" in value)


def _text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(value, list) and value and _inline(value):
        return [f"{pad}{json.dumps(value, ensure_ascii=False)}"]
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, list) and _inline(v):
                out.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
            elif isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text(v, indent + 1))
            elif isinstance(v, str) and "\n" in v:
                out.append(f"{pad}{k}:")
                out.extend(f"{pad}  {line}" for line in v.rstrip("\n").split("\n"))
            else:
                out.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, list) and _inline(v):
                out.append(f"{pad}- {json.dumps(v, ensure_ascii=False)}")
            elif isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                out.extend(_text(v, indent + 1))
            elif isinstance(v, str) and "\n" in v:
                out.append(f"{pad}-")
                out.extend(f"{pad}  {line}" for line in v.rstrip("\n").split("\n"))
            else:
                out.append(f"{pad}- {v}")
    else:
        out.append(f"{pad}{value}")
    return out


def format_report(report: dict, fmt: str) -> str:
    if fmt == "text":
        head = [f"command: {report['command']}", f"input_hash: {report['input_hash']}"]
        return "\n".join(head + _text(report["payload"])) + "\n"
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv=None) -> tuple[dict | None, int, str]:
    """Parse argv and run one command; returns (report, exit code, format)."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args), EXIT_OK, args.format
    except PropertyFailure as exc:
        return exc.report, EXIT_PROPERTY, args.format
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_CAP, args.format
    except OracleDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_PROPERTY, args.format
    except (CellIdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_USAGE, args.format


def main(argv=None) -> int:
    report, code, fmt = run(argv)
    if report is not None:
        sys.stdout.write(format_report(report, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
