"""Command line front end: ``gzonotope <command> [input] [--json]``.

Exit status: 0 success / routes agree, 1 routes disagree, 2 input error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as gr
from .chromatic import acyclic_count, acyclic_count_brute, chromatic_poly
from .errors import BudgetError, ValidationError
from .io import format_graph_text, parse_graph, parse_inline_edges
from .oracle import enumerate_covectors, f_vector_oracle, fubini
from .qsym import hook_coefficient, psi_q
from .zonotope import antipode, f_poly_flats, f_poly_main, f_vector

PSI_DEFAULT = 8
ORACLE_DEFAULT = 7

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_argument_group("graph input (exactly one)")
    src.add_argument("--file", "-f", help="graph file, text or JSON ('-' for stdin)")
    src.add_argument("--edges", help="inline edge list such as '1-2,1-3,2-3' (needs --n)")
    src.add_argument("--family", choices=["complete", "cycle", "path", "star"])
    p.add_argument("--n", type=int, help="vertex count for --edges / --family")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--budget", type=int, help="override the vertex-count enumeration guard")
    p.add_argument("--seed", type=int, default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gzonotope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fp = sub.add_parser("fpoly", parents=[common], help="f-polynomial of the zonotope")
    fp.add_argument("--route", choices=["flats", "main"], default="flats")
    sub.add_parser("fvector", parents=[common], help="f-vector by dimension")
    sub.add_parser("psiq", parents=[common], help="q-chromatic symmetric function")
    sub.add_parser("chromatic", parents=[common], help="chromatic polynomial")
    ac = sub.add_parser("acyclic", parents=[common], help="acyclic orientation count")
    ac.add_argument("--brute", action="store_true", help="also enumerate all orientations")
    sub.add_parser("antipode", parents=[common], help="antipode expansion over flats")
    orc = sub.add_parser("oracle", parents=[common], help="f-vector from covector enumeration")
    orc.add_argument("--dump-covectors", action="store_true")
    tw = sub.add_parser("twist", parents=[common], help="Whitney twist and its invariants")
    tw.add_argument("--u", type=int, required=True)
    tw.add_argument("--v", type=int, required=True)
    tw.add_argument("--side", default="", help="comma-separated vertices of the twisted side")
    ve = sub.add_parser("verify", parents=[common], help="compare all three f-polynomial routes")
    ve.add_argument("--random", action="store_true", help="seeded random graphs instead of one input")
    ve.add_argument("--count", type=int, default=10)
    ve.add_argument("--p", type=float, default=0.5)
    sub.add_parser("family", parents=[common], help="print a family graph")
    return parser


def load_graph(args) -> gr.Graph:
    given = [s for s in ("file", "edges", "family") if getattr(args, s) is not None]
    if len(given) != 1:
        raise ValidationError("give exactly one of --file, --edges, --family")
    if args.file is not None:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return parse_graph(text)
    if args.n is None:
        raise ValidationError(f"--{given[0]} needs --n")
    if args.edges is not None:
        return parse_inline_edges(args.n, args.edges)
    return gr.family(args.family, args.n)


def _budget(n: int, default: int, override: int | None, what: str) -> int:
    if override is not None:
        # ordered set partitions dominate both psi_q and the oracle
        print(f"# {what}: about {fubini(n)} ordered set partitions for n={n}", file=sys.stderr)
    limit = default if override is None else override
    if n > limit:
        hint = "" if override is not None else "; pass --budget"
        raise BudgetError(f"{what}: n={n} exceeds budget {limit}{hint}")
    return limit


def _psi_budget(g, args) -> int:
    return _budget(g.n, PSI_DEFAULT, args.budget, "psi_q")


def _oracle_budget(g, args) -> int:
    return _budget(g.n, ORACLE_DEFAULT, args.budget, "oracle")


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def verify_report(g: gr.Graph, psi_budget: int | None = None, oracle_budget: int | None = None) -> dict:
    """All three f-polynomial routes; the oracle is skipped over budget."""
    f_flats = f_poly_flats(g)
    f_main = f_poly_main(g, psi_budget)
    flats_vec = [f_flats[k] for k in range(gr.graph_rank(g) + 1)]
    try:
        oracle_vec = f_vector_oracle(g, oracle_budget)
    except BudgetError:
        oracle_vec = None
    agree = f_flats == f_main and (oracle_vec is None or oracle_vec == flats_vec)
    return {
        "graph": g.to_json(),
        "f_flats": f_flats.to_json(),
        "f_main": f_main.to_json(),
        "f_oracle": None if oracle_vec is None else [str(c) for c in oracle_vec],
        "oracle_skipped": oracle_vec is None,
        "agree": bool(agree),
    }


def run_verify(g: gr.Graph, args) -> tuple[int, dict]:
    psi_b = _psi_budget(g, args)
    try:
        oracle_b = _oracle_budget(g, args)
    except BudgetError:
        oracle_b = 0
    report = verify_report(g, psi_b, oracle_b)
    return (EXIT_OK if report["agree"] else EXIT_DISAGREE), report


def run_twist_demo(g: gr.Graph, u: int, v: int, side, psi_budget: int | None = None) -> dict:
    h = gr.whitney_twist(g, u, v, side)
    fg, fh = f_poly_flats(g), f_poly_flats(h)
    report = {
        "graph": g.to_json(),
        "twisted": h.to_json(),
        "f_graph": fg.to_json(),
        "f_twisted": fh.to_json(),
        "f_match": fg == fh,
    }
    if 3 <= g.n <= (psi_budget or PSI_DEFAULT):
        report["hook_graph"] = hook_coefficient(g, psi_budget).to_json()
        report["hook_twisted"] = hook_coefficient(h, psi_budget).to_json()
    return report


def _poly_text(coeffs: list[str], var: str = "q") -> str:
    from .poly import IntPolynomial

    return str(IntPolynomial.from_json(coeffs, var))


def dispatch(args) -> int:
    cmd = args.command
    if cmd == "verify" and args.random:
        n = args.n or 6
        results = []
        status = EXIT_OK
        for k in range(args.count):
            g = gr.random_graph(n, args.p, seed=args.seed * 100003 + k)
            code, rep = run_verify(g, args)
            status = max(status, code)
            results.append(rep)
        text = "\n".join(
            f"{gr.Graph(r['graph']['n'], tuple(map(tuple, r['graph']['edges'])))}: "
            f"{_poly_text(r['f_flats'])}  agree={r['agree']}"
            for r in results
        )
        _emit(args, text, {"reports": results, "agree": status == EXIT_OK})
        return status

    g = load_graph(args)

    if cmd == "family":
        _emit(args, format_graph_text(g).rstrip(), g.to_json())
    elif cmd == "fpoly":
        f = f_poly_flats(g) if args.route == "flats" else f_poly_main(g, _psi_budget(g, args))
        _emit(args, str(f), {"graph": g.to_json(), "route": args.route, "f": f.to_json()})
    elif cmd == "fvector":
        vec = f_vector(g)
        _emit(args, " ".join(map(str, vec)), {"graph": g.to_json(), "f_vector": [str(c) for c in vec]})
    elif cmd == "psiq":
        psi = psi_q(g, _psi_budget(g, args))
        _emit(args, str(psi), {"graph": g.to_json(), "psi_q": psi.to_json()})
    elif cmd == "chromatic":
        chi = chromatic_poly(g)
        _emit(args, str(chi), {"graph": g.to_json(), "chromatic": chi.to_json()})
    elif cmd == "acyclic":
        a = acyclic_count(g)
        payload = {"graph": g.to_json(), "acyclic": str(a)}
        text = str(a)
        if args.brute:
            b = acyclic_count_brute(g)
            payload["acyclic_brute"] = str(b)
            text += f" (brute force: {b})"
            if a != b:
                _emit(args, text, payload)
                return EXIT_DISAGREE
        _emit(args, text, payload)
    elif cmd == "antipode":
        s = antipode(g)
        payload = {
            "graph": g.to_json(),
            "terms": [
                {"coefficient": str(t.coefficient), "flat": [list(e) for e in sorted(t.flat_edges)]}
                for t in s.terms
            ],
        }
        _emit(args, str(s), payload)
    elif cmd == "oracle":
        limit = _oracle_budget(g, args)
        vec = f_vector_oracle(g, limit)
        covs = sorted(enumerate_covectors(g, limit)) if args.dump_covectors else None
        if args.json:
            payload = {"graph": g.to_json(), "f_vector": [str(c) for c in vec], "covectors": sum(vec)}
            if covs is not None:
                payload["covector_list"] = covs
            print(json.dumps(payload, sort_keys=True))
        elif covs is not None:
            print("\n".join(covs))
        else:
            print(f"{' '.join(map(str, vec))}  ({sum(vec)} covectors)")
    elif cmd == "twist":
        side = [int(x) for x in args.side.replace(",", " ").split()]
        rep = run_twist_demo(g, args.u, args.v, side, args.budget)
        lines = [
            f"graph:   {g}  f = {_poly_text(rep['f_graph'])}",
            f"twisted: {gr.Graph(rep['twisted']['n'], tuple(map(tuple, rep['twisted']['edges'])))}"
            f"  f = {_poly_text(rep['f_twisted'])}",
            f"f-polynomials match: {rep['f_match']}",
        ]
        if "hook_graph" in rep:
            lines.append(f"[m_3,1^{g.n - 3}] graph:   {_poly_text(rep['hook_graph'])}")
            lines.append(f"[m_3,1^{g.n - 3}] twisted: {_poly_text(rep['hook_twisted'])}")
        _emit(args, "\n".join(lines), rep)
        return EXIT_OK if rep["f_match"] else EXIT_DISAGREE
    elif cmd == "verify":
        code, rep = run_verify(g, args)
        text = (
            f"flats:  {_poly_text(rep['f_flats'])}\n"
            f"main:   {_poly_text(rep['f_main'])}\n"
            f"oracle: {'skipped' if rep['f_oracle'] is None else ' '.join(rep['f_oracle'])}\n"
            f"agree:  {rep['agree']}"
        )
        _emit(args, text, rep)
        return code
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return dispatch(args)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
