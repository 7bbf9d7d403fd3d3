"""Command-line entry points: ``eval``, ``sweep`` and ``fibered``.

Exit status: 0 on success, 1 on usage errors (bad arguments, tuples outside
the box, unwritable output), 2 when ``--expect-paper`` finds a survivor set
other than the two known exceptional families.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .criterion import kulikov_bound, polynomial_form
from .fibered_product import uniqueness_certificate
from .invariants import (
    BranchInvariants,
    InvalidModelError,
    SurfaceModel,
    chern_from_branch,
    chern_from_model,
    derive_branch,
    dual_degree,
    line_preimage_genus,
)
from .report import certificate_json, dumps, loads, render_fibered, render_report
from .sweep import DEFAULT_MAX_DEGREE, Outcome, box_violation, expected_survivors, judge, run_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chisini-audit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="judge a single surface model (m, dbar, u, gbar, t)")
    for name in ("m", "dbar", "u", "gbar", "t"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = sub.add_parser("sweep", help="sweep every box tuple for a degree range")
    p.add_argument("m_min", type=int)
    p.add_argument("m_max", type=int)
    p.add_argument("--out", metavar="PATH", help="write the JSON certificate here")
    p.add_argument("--json", action="store_true", help="print the certificate instead of the report")
    p.add_argument("--expect-paper", action="store_true",
                   help="exit 2 unless the survivors are exactly the known exceptional families")
    p.add_argument("--allow-above-11", action="store_true",
                   help="accept m_max > 11; those degrees are recorded as covered by AX2")
    p.add_argument("--workers", type=int, default=1, help="parallel kernel workers")

    p = sub.add_parser("fibered", help="fibered-product uniqueness check for branch data")
    for name in ("d", "g", "c", "n", "deg1"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    return parser


def evaluation(model: SurfaceModel) -> dict:
    v = judge(model)
    b = derive_branch(model)
    bound = kulikov_bound(b)
    out = {
        "tuple": v.to_dict()["tuple"],
        "branch": b.to_dict(),
        "deg_B": b.degree,
        "chern_from_model": chern_from_model(model).to_dict(),
        "chern_from_branch": chern_from_branch(model.m, b).to_dict(),
        "dual_degree": dual_degree(b),
        "line_preimage_genus": line_preimage_genus(model.m, b.d),
        "bound": {"num": bound.numerator, "den": bound.denominator},
        "polynomial_form": polynomial_form(model),
        "verdict": {
            "outcome": v.outcome.value,
            "detail": v.detail,
            "cited": v.cited,
            "classification": v.classification,
        },
    }
    if v.outcome is Outcome.SURVIVOR:
        out["fibered"] = uniqueness_certificate(b, model.m).to_dict()
    return out


def _render_eval(ev: dict) -> str:
    t, b = ev["tuple"], ev["branch"]
    cm, cb = ev["chern_from_model"], ev["chern_from_branch"]
    verdict = ev["verdict"]
    label = verdict["outcome"]
    if verdict["detail"]:
        label += "/" + verdict["detail"]
    if verdict["cited"]:
        label += f" [{verdict['cited']}]"
    if verdict["classification"]:
        label += f" -> {verdict['classification']}"
    k = ev["dual_degree"]
    lines = [
        f"model (m;dbar,u,gbar,t) = ({t['m']};{t['dbar']},{t['u']},{t['gbar']},{t['t']})",
        f"verdict: {label}",
        f"branch curve: deg B={ev['deg_B']} d={b['d']} g={b['g']} c={b['c']} n={b['n']}",
        f"chern (model):  K^2={cm['k2']} e={cm['e']}",
        f"chern (branch): K^2={cb['k2']} e={cb['e']}",
        f"dual degree: {k}  (deg B={ev['deg_B']}, k(k-1)={k * (k - 1)})",
        f"line preimage genus: {ev['line_preimage_genus']}",
        f"degree bound: {ev['bound']['num']}/{ev['bound']['den']}  polynomial form: {ev['polynomial_form']}",
    ]
    text = "\n".join(lines) + "\n"
    if "fibered" in ev:
        text += render_fibered(ev["fibered"])
    return text


def cmd_eval(args) -> int:
    try:
        model = SurfaceModel(args.m, args.dbar, args.u, args.gbar, args.t)
    except InvalidModelError as exc:
        raise UsageError(f"tuple outside the enumeration box: violates {exc.constraint} ({exc})")
    problem = box_violation(model)
    if problem is not None:
        raise UsageError(f"tuple outside the enumeration box: violates {problem}")
    ev = evaluation(model)
    sys.stdout.write(dumps(ev) if args.json else _render_eval(ev))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.m_min < 3 or args.m_min > args.m_max:
        raise UsageError(f"invalid degree range [{args.m_min}, {args.m_max}]")
    if args.m_max > DEFAULT_MAX_DEGREE and not args.allow_above_11:
        raise UsageError(
            f"m_max={args.m_max} exceeds {DEFAULT_MAX_DEGREE}; pass --allow-above-11"
        )
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    cert = run_sweep(args.m_min, args.m_max, workers=args.workers, above_max="delegate")
    text = certificate_json(cert)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}")
    sys.stdout.write(text if args.json else render_report(loads(text)))

    if args.expect_paper:
        found = cert.survivor_map()
        expected = expected_survivors(args.m_min, args.m_max)
        if found != expected:
            sys.stderr.write(f"survivor mismatch: expected {expected}, found {found}\n")
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_fibered(args) -> int:
    b = BranchInvariants(args.d, args.g, args.c, args.n)
    try:
        b.validate()
    except ValueError as exc:
        raise UsageError(str(exc))
    if not b.closes():
        raise UsageError(f"{b} breaks d(2d-3) = c + n + g - 1")
    if args.deg1 < 3:
        raise UsageError(f"deg1={args.deg1} must be at least 3")
    fib = uniqueness_certificate(b, args.deg1).to_dict()
    sys.stdout.write(dumps(fib) if args.json else render_fibered(fib))
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "fibered": cmd_fibered}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"chisini-audit {args.command}: {exc}\n")
        return EXIT_USAGE


def _entry() -> None:
    sys.exit(main())
