"""Scenario-driven command-line front end.

Subcommands: build, sample, stem, verify, section.  Scenarios are flat JSON
files (see scenarios/ in the repository root):

    {"case": "c2_1", "branch": "first", "k": [-1.0, -2.0, -1.3333333333333333],
     "p3": 1.0, "xi0": [0.0, 0.0, 0.0], "t_min": 3.0}

The generic case takes "p": [p1, p2, p3] instead of "p3" and may carry
"limit_target": "<case>" for the limits suite.  Exit codes: 0 success,
1 verification failure, 2 parse/usage error, 3 inadmissible parameters,
4 I/O error.  Output is deterministic: numbers are serialized with Python's
shortest round-trip repr and no timestamps are embedded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .catalog import Case, ResonantSolution, build_case, make_generic
from .errors import KPStemError, InadmissibleParameterError, DegenerateParameterError
from .geometry import (
    arm_catalog,
    arm_profile,
    cross_section,
    find_arm,
    normalize_line,
    stem_endpoints,
    stem_length_formula,
    trajectory_line,
    velocity_table,
)
from .tau import u_on_grid
from .verify import asymptotic_match, kp_residual, limit_convergence, ridge_trace

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_INADMISSIBLE, EXIT_IO = 0, 1, 2, 3, 4

_CASES = {c.value for c in Case}


class ScenarioError(Exception):
    pass


@dataclass(frozen=True)
class Scenario:
    case: str
    branch: str
    k: tuple[float, float, float]
    p3: float | None
    p: tuple[float, float, float] | None
    xi0: tuple[float, float, float]
    t_min: float
    limit_target: str | None

    def build(self) -> ResonantSolution:
        if self.case == "generic":
            return make_generic(self.k, self.p, xi0=self.xi0)
        return build_case(self.case, self.k, self.p3,
                          branch=self.branch, xi0=self.xi0)


def _vector(raw, name, n=3):
    if not isinstance(raw, (list, tuple)):
        raise ScenarioError(f"field {name} must be a list of {n} numbers")
    vals = []
    for i in range(n):
        if i >= len(raw) or raw[i] is None:
            raise ScenarioError(f"missing field {name}[{i}]")
        if not isinstance(raw[i], (int, float)) or isinstance(raw[i], bool):
            raise ScenarioError(f"field {name}[{i}] must be a number")
        vals.append(float(raw[i]))
    if len(raw) > n:
        raise ScenarioError(f"field {name} has more than {n} entries")
    return tuple(vals)


def parse_scenario(data: dict) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    case = data.get("case")
    if case is None:
        raise ScenarioError("missing field case")
    if case not in _CASES:
        raise ScenarioError(f"unknown case {case!r}")
    branch = data.get("branch", "first")
    if branch not in ("first", "second"):
        raise ScenarioError(f"unknown branch {branch!r}")
    k = _vector(data.get("k"), "k") if data.get("k") is not None else None
    if k is None:
        raise ScenarioError("missing field k")
    xi0 = _vector(data.get("xi0", [0.0, 0.0, 0.0]), "xi0")
    t_min = data.get("t_min", 3.0)
    if not isinstance(t_min, (int, float)) or isinstance(t_min, bool) or t_min < 0:
        raise ScenarioError("field t_min must be a nonnegative number")
    limit_target = data.get("limit_target")
    if limit_target is not None and limit_target not in _CASES - {"generic"}:
        raise ScenarioError(f"unknown limit_target {limit_target!r}")
    if case == "generic":
        if "p" not in data:
            raise ScenarioError("generic case requires field p = [p1, p2, p3]")
        p = _vector(data["p"], "p")
        return Scenario(case=case, branch=branch, k=k, p3=None, p=p, xi0=xi0,
                        t_min=float(t_min), limit_target=limit_target)
    if "p3" not in data:
        raise ScenarioError("missing field p3")
    p3 = data["p3"]
    if not isinstance(p3, (int, float)) or isinstance(p3, bool):
        raise ScenarioError("field p3 must be a number")
    return Scenario(case=case, branch=branch, k=k, p3=float(p3), p=None,
                    xi0=xi0, t_min=float(t_min), limit_target=limit_target)


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from exc
    return parse_scenario(data)


def _scenario_echo(sc: Scenario) -> dict:
    echo = {"case": sc.case, "branch": sc.branch, "k": list(sc.k)}
    if sc.case == "generic":
        echo["p"] = list(sc.p)
    else:
        echo["p3"] = sc.p3
    echo["xi0"] = list(sc.xi0)
    echo["t_min"] = sc.t_min
    if sc.limit_target:
        echo["limit_target"] = sc.limit_target
    return echo


def _dump_json(obj, out):
    out.write(json.dumps(obj, indent=2))
    out.write("\n")


def _n_threads() -> int:
    raw = os.environ.get("KPII_STEM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------- commands

def cmd_build(args) -> int:
    sc = load_scenario(args.scenario)
    sol = sc.build()
    doc = {
        "version": __version__,
        "scenario": _scenario_echo(sc),
        "resolved": {"p1": sol.params.p[0], "p2": sol.params.p[1],
                     "p3": sol.params.p[2],
                     "omega": list(sol.params.omegas)},
        "a12": sol.a12,
        "resonance": {f"{i}{j}": kind.value
                      for (i, j), kind in sorted(sol.resonance.kinds.items())},
        "tau_terms": [{"coeff": c, "eps": list(eps)} for eps, c in sol.template],
    }
    if sol.spec.case is not Case.GENERIC:
        cat = arm_catalog(sol)
        doc["regime"] = cat.regime_before
        doc["arms"] = [
            {"label": a.label_str(), "region": r.value, "amplitude": a.amplitude,
             "velocity": list(a.velocity)}
            for r, a in cat.before]
        doc["stems"] = {"past": cat.stem_past.label_str(),
                        "future": cat.stem_future.label_str()}
        doc["velocity_table"] = [
            {"label": row.label, "vx": row.vx, "vy": row.vy,
             "amplitude": row.amplitude}
            for row in velocity_table(sol)]
    _dump_json(doc, sys.stdout)
    return EXIT_OK


def _parse_grid(spec: str):
    parts = spec.split(",")
    if len(parts) != 6:
        raise ScenarioError("grid must be xmin,xmax,nx,ymin,ymax,ny")
    try:
        xmin, xmax, nx, ymin, ymax, ny = (float(parts[0]), float(parts[1]),
                                          int(parts[2]), float(parts[3]),
                                          float(parts[4]), int(parts[5]))
    except ValueError as exc:
        raise ScenarioError(f"invalid grid: {exc}") from exc
    if nx < 2 or ny < 2 or not (xmin < xmax and ymin < ymax):
        raise ScenarioError("grid needs xmin<xmax, ymin<ymax and nx,ny >= 2")
    return xmin, xmax, nx, ymin, ymax, ny


def _grid_values(sol, xs, ys, t):
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    n = _n_threads()
    if n <= 1 or X.shape[0] < 2 * n:
        return u_on_grid(sol.tau, X, Y, t)
    chunks = np.array_split(np.arange(X.shape[0]), n)
    out = np.empty_like(X)
    with ThreadPoolExecutor(max_workers=n) as pool:
        futs = {pool.submit(u_on_grid, sol.tau, X[idx], Y[idx], t): idx
                for idx in chunks}
        for fut, idx in futs.items():
            out[idx] = fut.result()
    return out


def cmd_sample(args) -> int:
    sc = load_scenario(args.scenario)
    sol = sc.build()
    t = float(args.t)
    xmin, xmax, nx, ymin, ymax, ny = _parse_grid(args.grid)
    xs = np.linspace(xmin, xmax, nx)
    ys = np.linspace(ymin, ymax, ny)
    U = _grid_values(sol, xs, ys, t)
    header = f"# kpii-stem v{__version__} case={sc.case} t={t!r}"
    try:
        if args.format == "csv":
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(header + "\n")
                fh.write("x,y,u\n")
                for i in range(nx):
                    for j in range(ny):
                        fh.write(f"{float(xs[i])!r},{float(ys[j])!r},"
                                 f"{float(U[i, j])!r}\n")
        else:
            doc = {"version": __version__, "scenario": _scenario_echo(sc),
                   "t": t,
                   "x_range": [xmin, xmax, nx], "y_range": [ymin, ymax, ny],
                   "values": [float(v) for v in U.reshape(-1)]}
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                _dump_json(doc, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _parse_tlist(raw: str):
    try:
        return [float(v) for v in raw.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise ScenarioError(f"invalid t list: {exc}") from exc


def cmd_stem(args) -> int:
    sc = load_scenario(args.scenario)
    sol = sc.build()
    rows = []
    for t in _parse_tlist(args.t):
        rep = stem_endpoints(sol, t, t_min=sc.t_min)
        try:
            closed = stem_length_formula(sol, t)
        except KPStemError:
            closed = None
        rows.append({
            "t": t,
            "ax": rep.endpoint_a[0], "ay": rep.endpoint_a[1],
            "bx": rep.endpoint_b[0], "by": rep.endpoint_b[1],
            "length": rep.length, "length_closed_form": closed,
            "midpoint_x": rep.midpoint[0], "midpoint_y": rep.midpoint[1],
            "midpoint_amplitude": rep.midpoint_amplitude,
            "valid": rep.valid,
        })
    cols = list(rows[0].keys()) if rows else []
    out = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8", newline="\n")
    try:
        if args.format == "csv":
            out.write(f"# kpii-stem v{__version__} case={sc.case}\n")
            out.write(",".join(cols) + "\n")
            for row in rows:
                out.write(",".join("" if row[c] is None else repr(row[c])
                                   for c in cols) + "\n")
        else:
            _dump_json({"version": __version__, "scenario": _scenario_echo(sc),
                        "rows": rows}, out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _verify_residual(sol, tol):
    rng = np.random.default_rng(20240811)
    pts = np.column_stack([rng.uniform(-50, 50, 1000),
                           rng.uniform(-50, 50, 1000),
                           rng.uniform(-10, 10, 1000)])
    rep = kp_residual(sol, pts, tol=tol)
    return [{"check": "field_equation_residual",
             "measured": rep.max_abs_residual, "tolerance": tol,
             "pass": rep.max_abs_residual < tol}]


def _verify_limits(sc, sol, tol):
    rng = np.random.default_rng(7)
    pts = np.column_stack([rng.uniform(-1.25, 1.25, 200),
                           rng.uniform(-1.25, 1.25, 200),
                           rng.uniform(-0.05, 0.05, 200)])
    if sol.spec.case is Case.GENERIC:
        if not sc.limit_target:
            return [{"check": "limit_convergence", "measured": None,
                     "tolerance": tol, "pass": False,
                     "note": "generic scenario without limit_target"}]
        target = build_case(sc.limit_target, sc.k, sc.p[2], branch=sc.branch)
        dev = float(np.abs(
            u_on_grid(sol.tau, pts[:, 0], pts[:, 1], pts[:, 2])
            - u_on_grid(target.tau, pts[:, 0], pts[:, 1], pts[:, 2])).max())
        return [{"check": f"deviation_from_{sc.limit_target}_template",
                 "measured": dev, "tolerance": tol, "pass": dev < tol}]
    devs = limit_convergence(sol, [1e3, 1e4, 1e5, 1e6], pts)
    mono = all(devs[i + 1] <= devs[i] for i in range(len(devs) - 1))
    return [{"check": "limit_ladder_end", "measured": devs[-1],
             "tolerance": tol, "pass": devs[-1] < tol},
            {"check": "limit_ladder_monotone", "measured": devs,
             "tolerance": None, "pass": mono}]


def _verify_asymptotics(sol, tol, T=20.0):
    cat = arm_catalog(sol)
    checks = []
    for side, tsign in (("before", -1.0), ("after", 1.0)):
        for region, arm in getattr(cat, side):
            dev = asymptotic_match(sol, arm, tsign * T)
            checks.append({"check": f"asymptotic_{side}_{arm.label_str()}",
                           "measured": dev, "tolerance": tol,
                           "pass": dev < tol})
    return checks


def _verify_ridge(sol, tol):
    checks = []
    for t in (-10.0, 10.0):
        rep = stem_endpoints(sol, t)
        cat = arm_catalog(sol)
        stem = cat.stem_past if t <= 0 else cat.stem_future
        line = trajectory_line(stem, t)
        half = max(2.0, 0.2 * rep.length)
        trace = ridge_trace(sol, t, line, scan_window=(-half, half),
                            n_scans=11, anchor=rep.midpoint)
        fa, fb, fc = trace.fitted_line
        la, lb, lc = normalize_line(line)
        dev = max(abs(fa - la), abs(fb - lb), abs(fc - lc) / max(1.0, abs(lc)))
        checks.append({"check": f"ridge_line_t={t!r}", "measured": dev,
                       "tolerance": tol, "pass": dev < tol})
    return checks


def cmd_verify(args) -> int:
    sc = load_scenario(args.scenario)
    sol = sc.build()
    suites = ("residual", "limits", "asymptotics", "ridge") \
        if args.suite == "all" else (args.suite,)
    defaults = {"residual": 1e-8, "limits": 1e-4,
                "asymptotics": 1e-3, "ridge": 1e-4}
    checks = []
    for suite in suites:
        tol = args.tol if args.tol is not None else defaults[suite]
        if suite == "residual":
            checks += _verify_residual(sol, tol)
        elif suite == "limits":
            checks += _verify_limits(sc, sol, tol)
        elif suite == "asymptotics":
            if sol.spec.case is Case.GENERIC:
                checks.append({"check": "asymptotics", "measured": None,
                               "tolerance": tol, "pass": False,
                               "note": "not defined for generic scenarios"})
            else:
                checks += _verify_asymptotics(sol, tol)
        elif suite == "ridge":
            if sol.spec.case is Case.GENERIC:
                checks.append({"check": "ridge", "measured": None,
                               "tolerance": tol, "pass": False,
                               "note": "not defined for generic scenarios"})
            else:
                checks += _verify_ridge(sol, tol)
    ok = all(c["pass"] for c in checks)
    _dump_json({"version": __version__, "scenario": _scenario_echo(sc),
                "passed": ok, "checks": checks}, sys.stdout)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_section(args) -> int:
    sc = load_scenario(args.scenario)
    sol = sc.build()
    t = float(args.t)
    arm = None
    if args.line.startswith("abc:"):
        try:
            A, B, C = (float(v) for v in args.line[4:].split(","))
        except ValueError:
            print(f"error: invalid line spec {args.line!r}", file=sys.stderr)
            return EXIT_PARSE
        line = (A, B, C)
    elif args.line == "perp":
        rep = stem_endpoints(sol, t, t_min=sc.t_min)
        stem = arm_catalog(sol).stem_past if t <= 0 else arm_catalog(sol).stem_future
        A, B, C = trajectory_line(stem, t)
        # rotate 90 degrees about the midpoint
        mx, my = rep.midpoint
        line = (-B, A, B * mx - A * my)
    else:
        try:
            arm = find_arm(sol, args.line)
        except (KeyError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        line = arm.line_coeffs(t)
    lo, hi = (float(v) for v in args.range.split(","))
    pts = cross_section(sol, t, line, s_range=(lo, hi), n_samples=args.n)
    out = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8", newline="\n")
    try:
        out.write(f"# kpii-stem v{__version__} case={sc.case} t={t!r}\n")
        if arm is not None:
            out.write("s,u,u_arm\n")
            A, B, C = normalize_line(line)
            rep = stem_endpoints(sol, t, t_min=sc.t_min)
            d = A * rep.midpoint[0] + B * rep.midpoint[1] + C
            foot = (rep.midpoint[0] - d * A, rep.midpoint[1] - d * B)
            for s, u in pts:
                x = foot[0] + s * (-B)
                y = foot[1] + s * A
                prof = float(arm_profile(arm, sol, (x, y, t)))
                out.write(f"{float(s)!r},{float(u)!r},{prof!r}\n")
        else:
            out.write("s,u\n")
            for s, u in pts:
                out.write(f"{float(s)!r},{float(u)!r}\n")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="kpii-stem",
        description="Resonant three-soliton solutions of the KPII equation "
                    "and their variable-length stem structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="resolve a scenario and print a summary")
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("sample", help="sample u on a rectangular grid")
    p.add_argument("--scenario", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--grid", required=True, help="xmin,xmax,nx,ymin,ymax,ny")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("stem", help="stem endpoint/length/amplitude report")
    p.add_argument("--scenario", required=True)
    p.add_argument("--t", required=True, help="comma-separated list")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--scenario", required=True)
    p.add_argument("--suite", choices=("residual", "limits", "asymptotics",
                                       "ridge", "all"), default="all")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("section", help="cross-section of u along a line")
    p.add_argument("--scenario", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--line", required=True,
                   help="arm label like 1+2-3^ or 3, abc:A,B,C, or perp")
    p.add_argument("--range", default="-20,20")
    p.add_argument("--n", type=int, default=801)
    p.add_argument("--out")
    p.set_defaults(func=cmd_section)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InadmissibleParameterError, DegenerateParameterError) as exc:
        print(f"error: inadmissible scenario: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except KPStemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
