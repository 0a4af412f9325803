"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a violated record or a
counterexample, 2 invalid arguments or parameters, 3 numerical failure
(slow convergence or an argument outside the evaluation domain).
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import landen, regions, specialfn, verify
from .errors import CoefficientMismatch, DomainError, LandenError, ParamError, RegionMismatch, SlowConvergence
from .report import dumps, fmt_float, to_csv, to_json, to_table

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
TAIL_TOL_ENV = "LANDEN_TAIL_TOL"


@dataclass(frozen=True)
class RunConfig:
    tail_tol: float
    max_terms: int
    margin_tol: float
    grid: verify.Grid
    output_format: str = "table"
    output_path: str | None = None
    seed: int = 0

    @property
    def eval_config(self) -> specialfn.EvalConfig:
        return specialfn.EvalConfig(tail_tol=self.tail_tol, max_terms=self.max_terms)


def number(text: str) -> float:
    """Parse a decimal or an exact fraction such as ``1/2``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_box(text: str) -> dict[str, tuple[float, float]]:
    """``a:lo:hi,b:lo:hi`` -> ``{"a": (lo, hi), ...}``."""
    box = {}
    for part in text.split(","):
        try:
            name, lo, hi = part.split(":")
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad box entry {part!r}; expected name:lo:hi") from None
        box[name.strip()] = (number(lo), number(hi))
    return box


def _default_tail_tol() -> float:
    env = os.environ.get(TAIL_TOL_ENV)
    return number(env) if env else specialfn.DEFAULT_CONFIG.tail_tol


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tail-tol", type=number, default=None, help=f"series tail tolerance (env {TAIL_TOL_ENV})")
    common.add_argument("--max-terms", type=int, default=specialfn.DEFAULT_CONFIG.max_terms)
    common.add_argument("--margin-tol", type=number, default=verify.MARGIN_TOL)
    common.add_argument("--start", type=number, default=0.01)
    common.add_argument("--end", type=number, default=0.97)
    common.add_argument("--step", type=number, default=0.01)
    common.add_argument("--extended", action="store_true", help="extend the grid end to 0.99")
    common.add_argument("--format", dest="output_format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--output", dest="output_path", default=None)
    for name in ("a", "b", "c", "p", "q", "kappa", "nu", "b-shape", "c-sign", "x", "r"):
        common.add_argument(f"--{name}", type=number, default=None)

    parser = argparse.ArgumentParser(prog="landen-ineq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a special function")
    p.add_argument("--fn", required=True, choices=("2f1", "kummer", "bessel", "K", "closed"))
    p.add_argument("--method", choices=("agm", "series"), default="agm")
    p.add_argument("--form", choices=sorted(specialfn.CLOSED_FORM_TRIPLES), default="arcsin_form")

    p = sub.add_parser("identity", parents=[common], help="residuals of a Landen identity")
    p.add_argument("--which", required=True, choices=sorted(landen.IDENTITIES))
    p.add_argument("--method", choices=("agm", "series"), default="agm")
    p.add_argument("--residual-tol", type=number, default=1e-8)

    p = sub.add_parser("classify", parents=[common], help="parameter-region verdict")
    p.add_argument("--theorem", required=True, choices=("2.1", "2.3", "2.4", "ineq9"))
    p.add_argument("--kind", choices=("kummer", "bessel"), default="kummer")

    p = sub.add_parser("seq", parents=[common], help="monotonicity probe of a quotient sequence")
    p.add_argument("--which", required=True, choices=regions.SEQ_IDS)
    p.add_argument("--n", type=int, default=200)

    p = sub.add_parser("sweep", parents=[common], help="grid sweep of an inequality")
    p.add_argument("--theorem", required=True, choices=("2.1", "2.2", "2.3", "2.4", "ineq9", "elementary"))
    p.add_argument("--direction", default=None)
    p.add_argument("--kind", choices=("kummer", "bessel"), default="kummer")
    p.add_argument("--coeffs", default="ones", help="family name or comma-separated coefficients")
    p.add_argument("--override", action="store_true", help="sweep even outside the parameter region")

    p = sub.add_parser("search", parents=[common], help="seeded counterexample search")
    p.add_argument("--theorem", required=True, choices=sorted(verify.SEARCH_PARAMS))
    p.add_argument("--direction", default=None)
    p.add_argument("--box", type=parse_box, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100)
    return parser


def _run_config(args) -> RunConfig:
    tail_tol = args.tail_tol if args.tail_tol is not None else _default_tail_tol()
    end = 0.99 if args.extended else args.end
    return RunConfig(
        tail_tol=tail_tol,
        max_terms=args.max_terms,
        margin_tol=args.margin_tol,
        grid=verify.Grid(args.start, end, args.step),
        output_format=args.output_format,
        output_path=args.output_path,
        seed=getattr(args, "seed", 0),
    )


def _need(args, *names):
    values = []
    for name in names:
        v = getattr(args, name.replace("-", "_"))
        if v is None:
            raise ParamError(f"--{name} is required here")
        values.append(v)
    return values


def _triple(args) -> specialfn.HyperTriple:
    return specialfn.HyperTriple(*_need(args, "a", "b", "c"))


def _bessel(args) -> specialfn.BesselParams:
    c_sign = _need(args, "c-sign")[0]
    if args.kappa is not None:
        return specialfn.BesselParams.from_kappa(args.kappa, c_sign)
    nu, b_shape = _need(args, "nu", "b-shape")
    return specialfn.BesselParams(nu, b_shape, c_sign)


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _cmd_eval(args, rc: RunConfig):
    cfg = rc.eval_config
    if args.fn == "K":
        r = _need(args, "r")[0]
        ev, params = specialfn.elliptic_k(r, args.method, cfg), {"r": r, "method": args.method}
    elif args.fn == "closed":
        x = _need(args, "x")[0]
        value = specialfn.closed_form(args.form, x)
        ev, params = specialfn.Evaluation(value, 0, 0.0, True), {"form": args.form, "x": x}
    else:
        x = _need(args, "x")[0]
        if args.fn == "2f1":
            t = _triple(args)
            ev, params = specialfn.gauss_2f1(t, x, cfg), t.as_dict()
        elif args.fn == "kummer":
            kp = specialfn.KummerParams(*_need(args, "p", "q"))
            ev, params = specialfn.kummer_phi(kp, x, cfg), kp.as_dict()
        else:
            bp = _bessel(args)
            ev, params = specialfn.bessel_u(bp, x, cfg), bp.as_dict()
        params = {**params, "x": x}
    ev.checked()
    doc = {"fn": args.fn, "params": params, "value": ev.value, "terms_used": ev.terms_used,
           "tail_bound": ev.tail_bound, "converged": ev.converged}
    if rc.output_format == "json":
        text = dumps(doc) + "\n"
    elif rc.output_format == "csv":
        text = _rows_csv(("value", "terms_used", "tail_bound", "converged"),
                         [(ev.value, ev.terms_used, ev.tail_bound, ev.converged)])
    else:
        text = f"{fmt_float(ev.value)}\nterms_used={ev.terms_used} tail_bound={ev.tail_bound:.3g} converged={ev.converged}\n"
    return text, EXIT_OK


def _cmd_identity(args, rc: RunConfig):
    cfg = rc.eval_config
    rs = [args.r] if args.r is not None else rc.grid.points()
    if args.which in ("transf", "transf-complement"):
        a, b = _need(args, "a", "b")
        check = landen.IDENTITIES[args.which]
        results = [check(a, b, r, cfg) for r in rs]
        params = {"a": a, "b": b}
    else:
        check = landen.IDENTITIES[args.which]
        results = [check(r, cfg, args.method) for r in rs]
        params = {"method": args.method}
    worst = max(res.rel_residual for res in results)
    code = EXIT_OK if worst <= args.residual_tol else EXIT_VIOLATION
    rows = [(res.r, res.lhs, res.rhs, res.rel_residual) for res in results]
    if rc.output_format == "json":
        doc = {"identity": args.which, "params": params,
               "records": [dict(zip(("r", "lhs", "rhs", "rel_residual"), row)) for row in rows],
               "max_rel_residual": worst}
        text = dumps(doc) + "\n"
    elif rc.output_format == "csv":
        text = _rows_csv(("r", "lhs", "rhs", "rel_residual"), rows)
    else:
        lines = [f"{r:>8.4g} {lhs:>22.15g} {rhs:>22.15g} {res:>10.3g}" for r, lhs, rhs, res in rows]
        text = "\n".join(lines) + f"\nmax_rel_residual={worst:.3g}\n"
    return text, code


def _cmd_classify(args, rc: RunConfig):
    if args.theorem == "2.1":
        verdict = regions.classify_thm21(_triple(args))
    elif args.theorem == "2.4":
        verdict = regions.classify_thm24(_triple(args))
    elif args.theorem == "ineq9":
        verdict = regions.classify_ineq9(*_need(args, "a", "b"))
    elif args.kind == "kummer":
        verdict = regions.classify_kummer(specialfn.KummerParams(*_need(args, "p", "q")))
    else:
        verdict = regions.classify_bessel(_bessel(args))
    doc = {"branch": verdict.branch.value, "fired_condition": verdict.fired_condition,
           "boundary": verdict.boundary, "notes": list(verdict.notes)}
    if rc.output_format == "json":
        text = dumps(doc) + "\n"
    elif rc.output_format == "csv":
        text = _rows_csv(("branch", "fired_condition", "boundary"),
                         [(verdict.branch.value, verdict.fired_condition, verdict.boundary)])
    else:
        lines = [verdict.branch.value]
        if verdict.fired_condition:
            lines.append(f"fired: {verdict.fired_condition}")
        lines.append(f"boundary: {verdict.boundary}")
        lines.extend(verdict.notes)
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK


def _cmd_seq(args, rc: RunConfig):
    params = {k: getattr(args, k) for k in ("a", "b", "c") if getattr(args, k) is not None}
    probe = regions.seq_probe(args.which, params, args.n, keep_values=True)
    if rc.output_format == "json":
        doc = {"seq_id": probe.seq_id, "params": dict(probe.params), "n_max": probe.n_max,
               "classification": probe.classification.value, "first_violation": probe.first_violation,
               "values": list(probe.values)}
        text = dumps(doc) + "\n"
    elif rc.output_format == "csv":
        text = _rows_csv(("n", "value"), list(enumerate(probe.values)))
    else:
        text = probe.classification.value + "\n"
        if probe.first_violation is not None:
            text += f"first_violation: {probe.first_violation}\n"
    return text, EXIT_OK


def _coeffs(text: str):
    if text in verify.COEFFICIENT_FAMILIES:
        return verify.COEFFICIENT_FAMILIES[text]
    return [number(v) for v in text.split(",")]


def _cmd_sweep(args, rc: RunConfig):
    cfg, grid, tol = rc.eval_config, rc.grid, rc.margin_tol
    d = args.direction
    if args.theorem == "2.1":
        report = verify.sweep_thm21(_triple(args), d or "ineq1", grid, cfg, override=args.override, margin_tol=tol)
    elif args.theorem == "2.2":
        report = verify.sweep_thm22(_coeffs(args.coeffs), d or "ineq5", grid, cfg, margin_tol=tol)
    elif args.theorem == "2.3":
        params = specialfn.KummerParams(*_need(args, "p", "q")) if args.kind == "kummer" else _bessel(args)
        report = verify.sweep_thm23(args.kind, params, grid, cfg, override=args.override, margin_tol=tol)
    elif args.theorem == "2.4":
        report = verify.sweep_thm24(_triple(args), d or "ineq6", grid, cfg, override=args.override, margin_tol=tol)
    elif args.theorem == "ineq9":
        a, b = _need(args, "a", "b")
        report = verify.sweep_ineq9(a, b, grid, cfg, override=args.override, margin_tol=tol)
    else:
        arcsin, logpow = verify.elementary_checks(grid, margin_tol=tol)
        if d not in (None, "arcsin", "logpow"):
            raise ParamError("elementary sweeps take --direction arcsin or logpow")
        report = logpow if d == "logpow" else arcsin
    render = {"json": to_json, "csv": to_csv, "table": to_table}[rc.output_format]
    return render(report), EXIT_VIOLATION if report.n_violations else EXIT_OK


def _cmd_search(args, rc: RunConfig):
    default_direction = {"2.1": "ineq1", "2.4": "ineq6"}.get(args.theorem, "")
    direction = args.direction or default_direction
    found = verify.search_counterexample(args.theorem, direction, args.box, args.seed, args.budget,
                                         rc.grid, rc.eval_config, margin_tol=rc.margin_tol)
    if rc.output_format == "json":
        doc = {"theorem_id": args.theorem, "direction": direction, "seed": args.seed, "budget": args.budget,
               "found": found is not None}
        if found is not None:
            rec = found.record
            doc.update(params=dict(found.params), sample_index=found.sample_index,
                       record={"r": rec.r, "lhs": rec.lhs, "rhs": rec.rhs, "margin": rec.margin,
                               "verdict": rec.verdict.value})
        text = dumps(doc) + "\n"
    elif rc.output_format == "csv":
        rows = [] if found is None else [(found.record.r, found.record.lhs, found.record.rhs,
                                          found.record.margin, found.record.verdict.value)]
        text = _rows_csv(("r", "lhs", "rhs", "margin", "verdict"), rows)
    elif found is None:
        text = "none\n"
    else:
        rec = found.record
        text = (f"counterexample at sample {found.sample_index}: {dict(found.params)}\n"
                f"r={fmt_float(rec.r)} lhs={fmt_float(rec.lhs)} rhs={fmt_float(rec.rhs)} "
                f"margin={fmt_float(rec.margin)}\n")
    return text, EXIT_VIOLATION if found is not None else EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "identity": _cmd_identity,
    "classify": _cmd_classify,
    "seq": _cmd_seq,
    "sweep": _cmd_sweep,
    "search": _cmd_search,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rc = _run_config(args)
        text, code = COMMANDS[args.command](args, rc)
    except (SlowConvergence, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ParamError, RegionMismatch, CoefficientMismatch, LandenError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if rc.output_path:
        with open(rc.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
