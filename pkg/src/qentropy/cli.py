"""Command-line front end: entropy sweeps, uncertainty relations, conjecture
scans, thermostatistics and the acceptance suites.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__, acceptance, conjecture, entropy, thermo, uncertainty
from .entropy import DivergentEntropy, EntropyKind
from .quadrature import SWEEP_REL_TOL, NonConvergent
from .systems import Space, SystemDescriptor, parse_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGENT = 0, 1, 2, 3
CLAMP = 1e-9
ENTROPY_COLUMNS = ["system", "n", "space", "kind", "alpha", "beta", "value", "path", "abs_err", "status"]


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """12 significant digits; blanks for missing values."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{float(x) + 0.0:.12g}"  # no "-0"
    return str(x)


def rel_tol_from_env() -> float:
    raw = os.environ.get("QENTROPY_REL_TOL")
    if raw is None:
        return SWEEP_REL_TOL
    try:
        v = float(raw)
    except ValueError:
        raise UsageError(f"QENTROPY_REL_TOL is not a number: {raw!r}")
    if not 1e-13 <= v < 1:
        raise UsageError("QENTROPY_REL_TOL must lie in [1e-13, 1)")
    return v


# ---------------------------------------------------------------------------
# argument parsing helpers

def parse_levels(text: str) -> list[int]:
    """'2', '0..3' or '1,3,4'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise UsageError(f"empty level range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError("no quantum numbers given")
    return out


def parse_grid(text: str, spacing: str = "linear") -> list[float]:
    """'min:max:count', a single value, 'inf', or a comma list."""
    text = text.strip()
    if ":" not in text:
        return [float(v) for v in text.split(",") if v.strip()]
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be min:max:count, got {text!r}")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1 or (count == 1 and lo != hi):
        raise UsageError("grid count must be >= 2 unless min equals max")
    if hi < lo:
        raise UsageError("grid max is below grid min")
    if count == 1:
        return [lo]
    if spacing == "linear":
        g = np.linspace(lo, hi, count)
    elif spacing == "log":
        if lo <= 0:
            raise UsageError("log spacing needs a positive minimum")
        g = np.geomspace(lo, hi, count)
    elif spacing == "inverse":
        if lo <= 0:
            raise UsageError("inverse spacing needs a positive minimum")
        g = 1.0 / np.linspace(1.0 / lo, 1.0 / hi, count)
        g[0], g[-1] = lo, hi
    else:
        raise UsageError(f"unknown spacing {spacing!r}")
    return [float(x) for x in g]


def parse_spaces(text: str) -> list[Space]:
    if text == "both":
        return [Space.Position, Space.Momentum]
    try:
        return [Space(text)]
    except ValueError:
        raise UsageError(f"unknown space {text!r}")


def parse_kinds(text: str) -> list[EntropyKind]:
    try:
        return [EntropyKind(k.strip().lower()) for k in text.split(",")]
    except ValueError:
        raise UsageError(f"unknown entropy kind in {text!r}")


def descriptors(args) -> list[SystemDescriptor]:
    try:
        fam = parse_family(args.system)
    except ValueError as exc:
        raise UsageError(str(exc))
    levels = parse_levels(args.n) if args.n is not None else [None]
    try:
        return [SystemDescriptor(fam, n, args.scale) for n in levels]
    except ValueError as exc:
        raise UsageError(str(exc))


# ---------------------------------------------------------------------------
# row producers (top-level so they can run in worker processes)

@dataclass(frozen=True)
class EntropyTask:
    sys: SystemDescriptor
    space: Space
    kind: EntropyKind
    alpha: float | None
    method: str
    rel_tol: float


def _scale_term(t: EntropyTask, alpha):
    s, pos = t.sys.scale, t.space is Space.Position
    sign = 1.0 if pos else -1.0
    if t.kind in (EntropyKind.Renyi, EntropyKind.Shannon) or (alpha is not None and abs(alpha - 1) < entropy.CROSSOVER):
        return sign * math.log(s)
    if t.kind is EntropyKind.Onicescu:
        return s ** (-sign)
    # Tsallis: factor multiplying the unit-scale integral of density**alpha
    return s ** (sign * (1.0 - alpha))


def entropy_row(t: EntropyTask) -> dict:
    row = {"system": t.sys.family.value, "n": t.sys.n, "space": t.space.value,
           "kind": t.kind.value, "alpha": t.alpha, "beta": None, "value": None,
           "path": None, "abs_err": None, "status": "OK"}
    alpha = t.alpha
    if alpha is not None:
        th = entropy.threshold(t.sys, t.space).alpha_threshold
        if alpha == th and alpha > 0:
            alpha = th + CLAMP
            row["alpha"] = alpha
            row["status"] = "CLAMPED"
        if alpha >= 0.5:
            row["beta"] = entropy.conjugate_beta(alpha)
    try:
        if t.kind is EntropyKind.Renyi:
            res = entropy.renyi(t.sys, t.space, alpha, t.method, t.rel_tol)
        elif t.kind is EntropyKind.Tsallis:
            res = entropy.tsallis(t.sys, t.space, alpha, t.method, t.rel_tol)
        elif t.kind is EntropyKind.Shannon:
            res = entropy.shannon(t.sys, t.space, t.method, t.rel_tol)
        else:
            res = entropy.onicescu(t.sys, t.space, t.method, t.rel_tol)
    except DivergentEntropy:
        row["status"] = "DIVERGENT"
        return row
    except NonConvergent as exc:
        row["status"] = "NONCONVERGENT"
        row["value"] = exc.best.value
        row["abs_err"] = exc.best.abs_error_estimate
        return row
    except ValueError as exc:
        row["status"] = f"ERROR: {exc}"
        return row
    row.update(value=res.value, path=res.path.value, abs_err=res.abs_error)
    if t.sys.scale != 1.0:
        row["scale_term"] = _scale_term(t, alpha)
    return row


@dataclass(frozen=True)
class RelationTask:
    sys: SystemDescriptor
    relation: uncertainty.Relation
    alpha: float | None
    method: str
    rel_tol: float
    operator_based: bool = False


RELATION_COLUMNS = ["system", "n", "relation", "alpha", "beta", "lhs", "rhs", "gap",
                    "satisfied", "saturated", "status"]


def relation_row(t: RelationTask) -> dict:
    R = uncertainty.Relation
    row = {"system": t.sys.family.value, "n": t.sys.n, "relation": t.relation.value,
           "alpha": t.alpha, "beta": None, "lhs": None, "rhs": None, "gap": None,
           "satisfied": None, "saturated": None, "status": "OK"}
    try:
        if t.alpha is not None:
            row["beta"] = entropy.conjugate_beta(t.alpha)
        if t.relation is R.RenyiSum:
            rep = uncertainty.renyi_relation(t.sys, t.alpha, t.method, t.rel_tol)
        elif t.relation is R.TsallisSobolev:
            rep = uncertainty.tsallis_relation(t.sys, t.alpha, t.method, t.rel_tol)
            if t.alpha > 1.0:
                row["status"] = "DIAGNOSTIC"
        elif t.relation is R.ShannonSum:
            rep = uncertainty.shannon_relation(t.sys, t.method, t.rel_tol)
        else:
            rep = uncertainty.heisenberg_relation(t.sys, t.operator_based)
            if t.operator_based:
                row["status"] = "DIAGNOSTIC"
    except DivergentEntropy:
        row["status"] = "DIVERGENT"
        return row
    except NonConvergent:
        row["status"] = "NONCONVERGENT"
        return row
    except (ValueError, NotImplementedError) as exc:
        row["status"] = f"ERROR: {exc}"
        return row
    row.update(lhs=rep.lhs, rhs=rep.rhs, gap=rep.gap, satisfied=rep.satisfied,
               saturated=rep.saturated)
    return row


def run_rows(fn, tasks, jobs: int) -> list[dict]:
    """Evaluate tasks in order; with jobs > 1 rows are computed in worker processes."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [fn(t) for t in tasks]


# ---------------------------------------------------------------------------
# output

def emit(rows: list[dict], columns: list[str], args, meta: dict) -> None:
    extra = [k for r in rows for k in r if k not in columns]
    cols = columns + sorted(set(extra), key=extra.index)
    if args.format == "json":
        payload = {"metadata": {"version": __version__, **meta},
                   "columns": cols,
                   "rows": [{c: _json_value(r.get(c)) for c in cols} for r in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([fmt(r.get(c)) for c in cols])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_value(v):
    if isinstance(v, (float, np.floating)):
        if not math.isfinite(v):
            return fmt(v)
        return float(f"{float(v):.12g}")
    if isinstance(v, np.integer):
        return int(v)
    return v


def _meta(args, rel_tol):
    return {"command": args.command, "rel_tol": rel_tol,
            "saturation_tol": uncertainty.SATURATION_TOL,
            "verification_tol": uncertainty.VERIFICATION_TOL}


def _exit_for(rows) -> int:
    return EXIT_NONCONVERGENT if any(r.get("status") == "NONCONVERGENT" for r in rows) else EXIT_OK


# ---------------------------------------------------------------------------
# commands

def cmd_entropy(args) -> int:
    rel_tol = rel_tol_from_env()
    kinds = parse_kinds(args.kind)
    alphas = parse_grid(args.alpha, args.spacing)
    tasks = []
    for s in descriptors(args):
        for kind in kinds:
            grid = alphas if kind in (EntropyKind.Renyi, EntropyKind.Tsallis) else [None]
            for a in grid:
                for space in parse_spaces(args.space):
                    tasks.append(EntropyTask(s, space, kind, a, args.method, rel_tol))
    rows = run_rows(entropy_row, tasks, args.jobs)
    emit(rows, ENTROPY_COLUMNS, args, _meta(args, rel_tol))
    return _exit_for(rows)


def _relation_tasks(args, relation, rel_tol):
    R = uncertainty.Relation
    tasks = []
    for s in descriptors(args):
        if relation in (R.RenyiSum, R.TsallisSobolev):
            for a in parse_grid(args.alpha, args.spacing):
                tasks.append(RelationTask(s, relation, a, args.method, rel_tol))
        elif relation is R.Heisenberg:
            tasks.append(RelationTask(s, relation, None, args.method, rel_tol, False))
            if args.operator:
                tasks.append(RelationTask(s, relation, None, args.method, rel_tol, True))
        else:
            tasks.append(RelationTask(s, relation, None, args.method, rel_tol))
    return tasks


def cmd_uncertainty(args) -> int:
    rel_tol = rel_tol_from_env()
    try:
        relation = uncertainty.Relation(args.relation)
    except ValueError:
        raise UsageError(f"unknown relation {args.relation!r}")
    rows = run_rows(relation_row, _relation_tasks(args, relation, rel_tol), args.jobs)
    emit(rows, RELATION_COLUMNS, args, _meta(args, rel_tol))
    return _exit_for(rows)


def cmd_tsallis_check(args) -> int:
    args.relation = "tsallis"
    return cmd_uncertainty(args)


def cmd_maximum(args) -> int:
    rel_tol = rel_tol_from_env()
    rows = []
    for s in descriptors(args):
        row = {"system": s.family.value, "n": s.n, "alpha_star": None, "value": None, "status": "OK"}
        try:
            m = uncertainty.find_sum_maximum(s, rel_tol=rel_tol)
        except NonConvergent:
            row["status"] = "NONCONVERGENT"
        else:
            if isinstance(m, uncertainty.Unbounded):
                row.update(alpha_star=m.alpha_edge, value=m.value_edge, status="UNBOUNDED")
            else:
                row.update(alpha_star=m.alpha, value=m.value)
        rows.append(row)
    emit(rows, ["system", "n", "alpha_star", "value", "status"], args, _meta(args, rel_tol))
    return _exit_for(rows)


def cmd_conjecture(args) -> int:
    rel_tol = rel_tol_from_env()
    rows = []
    for s in descriptors(args):
        try:
            tr = conjecture.conjecture_scan(s, args.points, args.diagnostic, rel_tol)
        except conjecture.NotGroundState as exc:
            raise UsageError(f"{exc}; pass --diagnostic to scan it anyway")
        for j, (a, v, g) in enumerate(zip(tr.alphas, tr.renyi_sums, tr.tsallis_gaps), 1):
            rows.append({"system": s.family.value, "n": s.n, "j": j, "alpha": a,
                         "beta": entropy.conjugate_beta(a), "renyi_sum": v, "tsallis_gap": g,
                         "status": "OK" if math.isfinite(v) else "FAILED"})
        rows.append({"system": s.family.value, "n": s.n, "j": "limit", "alpha": 0.5,
                     "beta": math.inf, "renyi_sum": tr.extrapolated_limit,
                     "tsallis_gap": tr.tsallis_extrapolated,
                     "status": f"target ln2pi, error {fmt(tr.renyi_error)}"})
    emit(rows, ["system", "n", "j", "alpha", "beta", "renyi_sum", "tsallis_gap", "status"],
         args, _meta(args, rel_tol))
    return EXIT_OK


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}")


def cmd_thermo(args) -> int:
    meta = {"command": f"thermo {args.thermo_command}"}
    try:
        if args.thermo_command == "entropy":
            p = thermo.DiscreteDistribution(tuple(_floats(args.probs)))
            rows = []
            for kind in parse_kinds(args.kind):
                rows.append({"kind": kind.value, "alpha": args.alpha,
                             "value": thermo.discrete_entropy(p, kind, args.alpha)})
            emit(rows, ["kind", "alpha", "value"], args, meta)
        elif args.thermo_command == "additivity":
            f = thermo.DiscreteDistribution(tuple(_floats(args.f)))
            g = thermo.DiscreteDistribution(tuple(_floats(args.g)))
            rep = thermo.additivity_check(f, g, args.alpha)
            emit([{"alpha": args.alpha, "renyi_gap": rep.renyi_gap, "tsallis_gap": rep.tsallis_gap,
                   "shannon_gap": rep.shannon_gap, "passed": rep.passed}],
                 ["alpha", "renyi_gap", "tsallis_gap", "shannon_gap", "passed"], args, meta)
            return EXIT_OK if rep.passed else EXIT_FAIL
        elif args.thermo_command == "equilibrium":
            ls = thermo.LevelSystem(tuple(_floats(args.energies)), args.temperature)
            eq = thermo.tsallis_equilibrium(ls, args.alpha)
            rows = [{"level": i, "energy": e, "probability": p,
                     "status": "CUTOFF" if i in eq.cutoff_levels else "OK"}
                    for i, (e, p) in enumerate(zip(ls.energies, eq.distribution.probs))]
            emit(rows, ["level", "energy", "probability", "status"], args,
                 {**meta, "partition": eq.partition})
        else:
            chk = thermo.renyi_free_energy_identity(_floats(args.energies), args.t1, args.t2)
            emit([{"t1": args.t1, "t2": args.t2, "alpha": args.t1 / args.t2, "lhs": chk.lhs,
                   "rhs": chk.rhs, "gap": chk.gap}],
                 ["t1", "t2", "alpha", "lhs", "rhs", "gap"], args, meta)
            return EXIT_OK if abs(chk.gap) <= 1e-10 else EXIT_FAIL
    except thermo.EmptySupport as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc))
    return EXIT_OK


SUITES = {"all": list(range(1, 14)), "acceptance": list(range(1, 14)),
          "dual-path": [11], "expansions": [12], "thermo": [13]}


def cmd_verify(args) -> int:
    numbers = []
    for name in args.suites or ["all"]:
        if name in SUITES:
            numbers.extend(SUITES[name])
        elif name.isdigit() and int(name) in acceptance.CRITERIA:
            numbers.append(int(name))
        else:
            raise UsageError(f"unknown suite {name!r}")
    numbers = sorted(set(numbers))
    failed = 0
    checks = 0
    for i in numbers:
        try:
            res = acceptance.CRITERIA[i]()
        except NonConvergent as exc:
            print(f"criterion {i:2d} NONCONVERGENT  {exc}")
            return EXIT_NONCONVERGENT
        print(res.line())
        checks += len(res.checks)
        if args.verbose or not res.passed:
            for c in res.checks:
                if args.verbose or not c.passed:
                    mark = "ok " if c.passed else "BAD"
                    tgt = "" if c.target is None or isinstance(c.target, bool) else f" target {fmt(c.target)} tol {fmt(c.tol)}"
                    print(f"    {mark} {c.name}: {fmt(c.value)}{tgt} {c.info}".rstrip())
        failed += not res.passed
    print(f"{len(numbers) - failed}/{len(numbers)} criteria passed, {checks} checks")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qentropy", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, alpha_default=None, grid=True):
        sp.add_argument("--system", required=True,
                        help="ho, robin, q1d, neumann or dirichlet")
        sp.add_argument("--n", help="quantum number(s): 2, 0..3 or 1,3")
        sp.add_argument("--scale", type=float, default=1.0, help="characteristic length")
        if grid:
            sp.add_argument("--alpha", default=alpha_default, required=alpha_default is None,
                            help="min:max:count, a value, inf, or a comma list")
            sp.add_argument("--spacing", choices=["linear", "log", "inverse"], default="linear")
        sp.add_argument("--method", choices=["auto", "closed", "quadrature"], default="auto")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--out", help="write to FILE instead of stdout")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    e = sub.add_parser("entropy", help="entropy sweeps over alpha")
    common(e, alpha_default="2")
    e.add_argument("--space", default="both", help="position, momentum or both")
    e.add_argument("--kind", default="renyi", help="comma list of renyi,tsallis,shannon,onicescu")
    e.set_defaults(func=cmd_entropy)

    u = sub.add_parser("uncertainty", help="uncertainty relations")
    common(u, alpha_default="1")
    u.add_argument("--relation", default="renyi", help="renyi, tsallis, shannon or heisenberg")
    u.add_argument("--operator", action="store_true",
                   help="also report the operator-based Heisenberg product")
    u.set_defaults(func=cmd_uncertainty)

    t = sub.add_parser("tsallis-check", help="both sides of the Tsallis relation")
    common(t, alpha_default="0.5:1:11")
    t.set_defaults(func=cmd_tsallis_check, operator=False)

    m = sub.add_parser("maximum", help="maximum of the Renyi sum over alpha")
    common(m, grid=False)
    m.set_defaults(func=cmd_maximum)

    c = sub.add_parser("conjecture", help="approach to alpha = 1/2")
    common(c, grid=False)
    c.add_argument("--points", type=int, default=12)
    c.add_argument("--diagnostic", action="store_true", help="allow excited states")
    c.set_defaults(func=cmd_conjecture)

    th = sub.add_parser("thermo", help="discrete entropies and equilibrium statistics")
    tsub = th.add_subparsers(dest="thermo_command", required=True)
    te = tsub.add_parser("entropy")
    te.add_argument("--probs", required=True)
    te.add_argument("--kind", default="renyi")
    te.add_argument("--alpha", type=float, default=2.0)
    ta = tsub.add_parser("additivity")
    ta.add_argument("--f", required=True)
    ta.add_argument("--g", required=True)
    ta.add_argument("--alpha", type=float, default=2.0)
    tq = tsub.add_parser("equilibrium")
    tq.add_argument("--energies", required=True)
    tq.add_argument("--temperature", type=float, default=1.0)
    tq.add_argument("--alpha", type=float, default=1.0)
    tf = tsub.add_parser("free-energy")
    tf.add_argument("--energies", required=True)
    tf.add_argument("--t1", type=float, required=True)
    tf.add_argument("--t2", type=float, required=True)
    for sp in (te, ta, tq, tf):
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--out")
    th.set_defaults(func=cmd_thermo)

    v = sub.add_parser("verify", help="run acceptance suites")
    v.add_argument("suites", nargs="*", help="all, 1..13, dual-path, expansions or thermo")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qentropy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergent as exc:
        print(f"qentropy: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT


if __name__ == "__main__":
    raise SystemExit(main())
