"""Analytic geometry of soliton arms and variable-length stems.

At fixed t the dominance regions of the tau terms partition the plane: term m
wins where psi_m(x, y) = K_m x + P_m y + W_m t + ln c_m + s_m is maximal.  The
solution u concentrates on the boundaries of this max-plus (tropical) skeleton:
along the boundary of terms m and n it is locally the sech^2 ridge

    u ~ ((K_m - K_n)^2 / 2) sech^2((psi_m - psi_n)/2),

so every arm, every junction and the bounded stem segment can be read off the
skeleton exactly.  Arms are the unbounded edges, the stem is the bounded edge,
and its endpoints are triple points of the skeleton.  The same endpoints are
also evaluated through closed-form coefficient tables (derived offline in
exact arithmetic, see tools/generate_closed_forms.py); the two paths are
cross-checked on every call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _closed_forms
from .catalog import Branch, Case, ResonantSolution
from .errors import (
    DegenerateLineError,
    InternalConsistencyError,
    UnsupportedCaseError,
    UnsupportedFormulaError,
)
from .tau import u_on_grid

Eps = tuple[int, int, int]


class Region(str, Enum):
    Y_NEG = "y-"
    Y_POS = "y+"
    X_NEG = "x-"
    X_POS = "x+"


class _Parallel:
    def __repr__(self):
        return "PARALLEL"


PARALLEL = _Parallel()


@dataclass(frozen=True)
class ArmDescriptor:
    """One sech^2 ridge: a soliton arm or stem species.

    label is the signed index combination (e.g. (1, 3) for the 1+3 arm,
    (1, -3) for 1-3); hat marks an extra profile offset of ln a12.  The
    trajectory at time t is A x + B y + C(t) = 0 with A, B the signed sums of
    k and p and C(t) = (signed omega sum) t + (signed xi0 sum) + offset.
    """

    label: tuple[int, ...]
    hat: bool
    amplitude: float
    profile_offset: float
    A: float
    B: float
    W: float
    xi0: float

    def line_coeffs(self, t: float) -> tuple[float, float, float]:
        return (self.A, self.B, self.W * t + self.xi0 + self.profile_offset)

    @property
    def velocity(self) -> tuple[float | None, float | None]:
        """Intercept velocities (-W/A, -W/B); None marks an undefined axis."""
        vx = -self.W / self.A if self.A != 0 else None
        vy = -self.W / self.B if self.B != 0 else None
        return (vx, vy)

    def label_str(self, hat_mark: bool = True) -> str:
        s = ""
        for j in self.label:
            sign = "-" if j < 0 else ("+" if s else "")
            s += f"{sign}{abs(j)}"
        return s + ("^" if self.hat and hat_mark else "")


@dataclass(frozen=True)
class AsymptoticCatalog:
    """Arm and stem assignment in the asymptotic regimes t -> -inf / +inf."""

    before: tuple[tuple[Region, ArmDescriptor], ...]
    after: tuple[tuple[Region, ArmDescriptor], ...]
    stem_past: ArmDescriptor
    stem_future: ArmDescriptor
    regime_before: str          # "y" or "x"; heuristic, see arm_catalog
    regime_after: str
    past_edge: tuple[Eps, Eps]
    future_edge: tuple[Eps, Eps]
    past_junctions: tuple[frozenset, frozenset]
    future_junctions: tuple[frozenset, frozenset]


@dataclass(frozen=True)
class StemReport:
    """Stem geometry snapshot at one time."""

    t: float
    endpoint_a: tuple[float, float]
    endpoint_b: tuple[float, float]
    length: float
    midpoint: tuple[float, float]
    midpoint_amplitude: float
    valid: bool


@dataclass(frozen=True)
class _Edge:
    m: int
    n: int
    lo: float
    hi: float
    lo_bind: int | None
    hi_bind: int | None
    base: tuple[float, float]
    direction: tuple[float, float]

    @property
    def bounded(self):
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def point(self, s: float) -> tuple[float, float]:
        return (self.base[0] + s * self.direction[0],
                self.base[1] + s * self.direction[1])


def _term_planes(sol: ResonantSolution, t: float):
    """(K, P, const) of psi_m at time t for terms with positive coefficient."""
    planes = []
    for idx, (eps, coeff) in enumerate(sol.template):
        if coeff <= 0:
            continue
        K, P, W, s0 = sol.exponent_of(eps)
        planes.append((idx, K, P, W * t + s0 + math.log(coeff)))
    return planes


def skeleton(sol: ResonantSolution, t: float) -> list[_Edge]:
    """Realized dominance-boundary edges of the tau function at time t."""
    planes = _term_planes(sol, t)
    edges = []
    for a in range(len(planes)):
        for b in range(a + 1, len(planes)):
            ia, Ka, Pa, ca = planes[a]
            ib, Kb, Pb, cb = planes[b]
            dK, dP, dc = Ka - Kb, Pa - Pb, ca - cb
            nrm = math.hypot(dK, dP)
            if nrm < 1e-13:
                continue
            base = (-dc * dK / nrm**2, -dc * dP / nrm**2)
            direction = (-dP / nrm, dK / nrm)
            lo, hi = -math.inf, math.inf
            lo_bind = hi_bind = None
            empty = False
            for c in range(len(planes)):
                if c in (a, b):
                    continue
                ic, Kc, Pc, cc = planes[c]
                alpha = ((Ka - Kc) * base[0] + (Pa - Pc) * base[1] + (ca - cc))
                beta = (Ka - Kc) * direction[0] + (Pa - Pc) * direction[1]
                if abs(beta) < 1e-13 * (1 + abs(Ka - Kc) + abs(Pa - Pc)):
                    if alpha < 0:
                        empty = True
                        break
                    continue
                bound = -alpha / beta
                if beta > 0:
                    if bound > lo:
                        lo, lo_bind = bound, ic
                else:
                    if bound < hi:
                        hi, hi_bind = bound, ic
            if empty:
                continue
            if (math.isfinite(lo) and math.isfinite(hi)
                    and lo >= hi - 1e-9 * (1 + abs(lo) + abs(hi))):
                continue
            edges.append(_Edge(m=ia, n=ib, lo=lo, hi=hi, lo_bind=lo_bind,
                               hi_bind=hi_bind, base=base, direction=direction))
    return edges


def _arm_from_terms(sol: ResonantSolution, m: int, n: int) -> ArmDescriptor:
    eps_m, c_m = sol.template[m]
    eps_n, c_n = sol.template[n]
    diff = tuple(a - b for a, b in zip(eps_m, eps_n))
    offset = math.log(c_m / c_n)
    lead = next(d for d in diff if d != 0)
    if lead < 0:
        diff = tuple(-d for d in diff)
        offset = -offset
    label = tuple(j * diff[j - 1] for j in (1, 2, 3) if diff[j - 1] != 0)
    K, P, W, s0 = sol.exponent_of(diff)
    return ArmDescriptor(label=label, hat=abs(offset) > 1e-14,
                         amplitude=K * K / 2.0, profile_offset=offset,
                         A=K, B=P, W=W, xi0=s0)


def _edge_keys(sol, edge: _Edge):
    eps = lambda i: sol.template[i][0]
    pair = (eps(edge.m), eps(edge.n))
    juncs = []
    for bind in (edge.lo_bind, edge.hi_bind):
        juncs.append(frozenset((*pair, eps(bind))) if bind is not None else None)
    return tuple(sorted(pair)), tuple(juncs)


def _base_label(sol, m: int, n: int) -> tuple[int, ...]:
    """Arm species ignoring the hat offset."""
    return _arm_from_terms(sol, m, n).label


def _ray_labels(sol, edges) -> set:
    return {_base_label(sol, e.m, e.n) for e in edges if not e.bounded}


def _stem_edge(sol, edges) -> _Edge | None:
    """Bounded edge whose species is absent from the rays (the stem).

    Inside elastic X-crossings the skeleton carries short phase-shift jogs
    whose species is also novel; the stem is the longest novel bounded edge
    (jogs stay of order ln a12 while the stem grows linearly in t).
    """
    rays = _ray_labels(sol, edges)
    best = None
    for e in edges:
        if not e.bounded or _base_label(sol, e.m, e.n) in rays:
            continue
        if best is None or (e.hi - e.lo) > (best.hi - best.lo):
            best = e
    return best


def _wings(sol, edges, stem: _Edge):
    """The four arm edges at the stem junctions, with outward directions."""
    out = []
    for bind, s_end in ((stem.lo_bind, stem.lo), (stem.hi_bind, stem.hi)):
        junction = frozenset((stem.m, stem.n, bind))
        vertex = stem.point(s_end)
        side = []
        for e in edges:
            pair = frozenset((e.m, e.n))
            if pair < junction and pair != frozenset((stem.m, stem.n)):
                # outward = away from the stem junction along the wing
                def _dist(s):
                    if not math.isfinite(s):
                        return math.inf
                    p = e.point(s)
                    return math.hypot(p[0] - vertex[0], p[1] - vertex[1])
                d = e.direction if _dist(e.lo) <= _dist(e.hi) else (
                    -e.direction[0], -e.direction[1])
                side.append((e, d))
        out.append((junction, vertex, side))
    return out


def _catalog_side(sol: ResonantSolution, t_ref: float, regime: str | None = None):
    edges = skeleton(sol, t_ref)
    stem = _stem_edge(sol, edges)
    if stem is None:
        return None
    junction_data = _wings(sol, edges, stem)
    if sum(len(side) for _, _, side in junction_data) != 4:
        return None
    if regime is None:
        # V-opening bisectors at the stem junctions decide the region axis
        bis_y = []
        for _, _, side in junction_data:
            bx = sum(d[0] for _, d in side)
            by = sum(d[1] for _, d in side)
            bis_y.append(abs(by) >= abs(bx))
        regime = "y" if all(bis_y) else "x"
    listing = []
    for _, _, side in junction_data:
        for e, d in side:
            comp = d[1] if regime == "y" else d[0]
            if regime == "y":
                region = Region.Y_POS if comp > 0 else Region.Y_NEG
            else:
                region = Region.X_POS if comp > 0 else Region.X_NEG
            listing.append((region, _arm_from_terms(sol, e.m, e.n)))
    listing.sort(key=lambda ra: (ra[0].value, ra[1].label, ra[1].hat))
    return stem, tuple(listing), regime


def arm_catalog(sol: ResonantSolution, t_scale: float = 50.0) -> AsymptoticCatalog:
    """Asymptotic arm/stem catalog derived from the dominance skeleton.

    The skeleton is evaluated at t = -T and t = +T; T grows until the stem
    species differs between the two sides (the reconnection signature).  The
    four catalog arms per side are the wing edges at the stem junctions.  The
    region axis ("y" vs "x" listing) is a heuristic: the y-axis listing is
    used when the V-shaped wing pairs at both stem junctions open
    predominantly in y, the x-axis listing otherwise.
    """
    if sol.spec.case is Case.GENERIC:
        raise UnsupportedCaseError("arm catalog requires a resonant case")
    if sol.arms is not None:
        return sol.arms
    T = t_scale
    for _ in range(6):
        past = _catalog_side(sol, -T)
        # one region axis for the whole catalog, decided on the before side
        regime = past[2] if past is not None else None
        future = _catalog_side(sol, +T, regime=regime)
        if past is not None and future is not None:
            stem_p, list_p, regime_p = past
            stem_f, list_f, regime_f = future
            if (stem_p.m, stem_p.n) != (stem_f.m, stem_f.n):
                break
        T *= 4.0
    else:
        raise InternalConsistencyError(
            "no stem reconnection found in the scanned time range")
    past_edge, past_junc = _edge_keys(sol, stem_p)
    future_edge, future_junc = _edge_keys(sol, stem_f)
    catalog = AsymptoticCatalog(
        before=list_p, after=list_f,
        stem_past=_arm_from_terms(sol, stem_p.m, stem_p.n),
        stem_future=_arm_from_terms(sol, stem_f.m, stem_f.n),
        regime_before=regime_p, regime_after=regime_f,
        past_edge=past_edge, future_edge=future_edge,
        past_junctions=tuple(past_junc), future_junctions=tuple(future_junc))
    object.__setattr__(sol, "arms", catalog)
    return catalog


def arm_profile(arm: ArmDescriptor, sol: ResonantSolution, point) -> float:
    """Asymptotic sech^2 profile of one arm at (x, y, t)."""
    x, y, t = point
    A, B, C = arm.line_coeffs(t)
    v = A * np.asarray(x, float) + B * np.asarray(y, float) + C
    # sech^2(v/2) = 4 e^{-|v|} / (1 + e^{-|v|})^2, overflow-safe
    e = np.exp(-np.abs(v))
    val = arm.amplitude * 4.0 * e / (1.0 + e) ** 2
    return float(val) if np.ndim(val) == 0 else val


def trajectory_line(arm: ArmDescriptor, t: float, normalized: bool = True):
    """Line coefficients (A, B, C) of the arm's trajectory at time t.

    Normalized form has A^2 + B^2 = 1 and A > 0 (or B > 0 when A == 0).
    """
    A, B, C = arm.line_coeffs(t)
    if not normalized:
        return (A, B, C)
    return normalize_line((A, B, C))


def normalize_line(line):
    A, B, C = line
    nrm = math.hypot(A, B)
    if nrm == 0:
        raise DegenerateLineError("line has zero normal vector")
    sign = 1.0
    if A < -1e-15 * nrm or (abs(A) <= 1e-15 * nrm and B < 0):
        sign = -1.0
    return (sign * A / nrm, sign * B / nrm, sign * C / nrm)


def intersect_lines(l1, l2, rel_tol: float = 1e-12):
    """Intersection point of two lines, or PARALLEL."""
    A1, B1, C1 = l1
    A2, B2, C2 = l2
    det = A1 * B2 - A2 * B1
    scale = math.hypot(A1, B1) * math.hypot(A2, B2)
    if abs(det) <= rel_tol * max(scale, 1e-300):
        return PARALLEL
    x = (-C1 * B2 + C2 * B1) / det
    y = (-A1 * C2 + A2 * C1) / det
    return (x, y)


def _junction_point(sol: ResonantSolution, junction: frozenset, t: float):
    """Best-conditioned pairwise intersection of the three concurrent lines."""
    eps_idx = {eps: i for i, (eps, _) in enumerate(sol.template)}
    idxs = [eps_idx[e] for e in junction]
    arms = [_arm_from_terms(sol, a, b)
            for i, a in enumerate(idxs) for b in idxs[i + 1:]]
    lines = [normalize_line(arm.line_coeffs(t)) for arm in arms]
    best, best_det = None, -1.0
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            det = abs(lines[i][0] * lines[j][1] - lines[j][0] * lines[i][1])
            if det > best_det:
                best_det, best = det, (lines[i], lines[j])
    pt = intersect_lines(*best)
    if pt is PARALLEL:
        raise DegenerateLineError(f"junction lines are parallel: {junction}")
    return pt


def _closed_form_point(sol: ResonantSolution, junction: frozenset, t: float):
    """Endpoint from the generated coefficient tables (first-branch mirror)."""
    case = sol.spec.case.value
    if case not in _closed_forms.VERTEX:
        raise UnsupportedFormulaError(f"no closed forms for case {case}")
    if any(abs(v) > 0 for v in sol.params.xi0):
        raise UnsupportedFormulaError("closed forms assume zero phase constants")
    key = tuple(sorted(junction))
    table = _closed_forms.VERTEX[case]
    if key not in table:
        raise UnsupportedFormulaError(f"no closed form for junction {key}")
    k1, k2, k3 = sol.params.k
    p3 = sol.params.p[2]
    L = sol.log_a12
    mirror = sol.spec.branch is Branch.SECOND
    xt, xL, yt, yL = table[key](k1, k2, k3, -p3 if mirror else p3)
    x = xt * t + xL * L
    y = yt * t + yL * L
    return (x, -y) if mirror else (x, y)


def _stem_side(sol: ResonantSolution, t: float):
    cat = arm_catalog(sol)
    if t <= 0:
        return cat.stem_past, cat.past_edge, cat.past_junctions
    return cat.stem_future, cat.future_edge, cat.future_junctions


def stem_endpoints(sol: ResonantSolution, t: float, t_min: float = 3.0) -> StemReport:
    """Endpoints, length and midpoint amplitude of the stem at time t.

    The past stem is reported for t <= 0, the future stem for t > 0.  The
    endpoints are computed both as intersections of the junction trajectories
    and through the closed-form tables; disagreement beyond 1e-9 relative is
    an internal error.  Inside |t| < t_min the report carries valid=False
    (the straight-trajectory description degrades near the reconnection).
    """
    if sol.spec.case is Case.GENERIC:
        raise UnsupportedCaseError("stem endpoints require a resonant case")
    _, _, junctions = _stem_side(sol, t)
    keys = sorted(tuple(sorted(j)) for j in junctions)
    pts = []
    for key in keys:
        junction = frozenset(key)
        geo = _junction_point(sol, junction, t)
        try:
            closed = _closed_form_point(sol, junction, t)
        except UnsupportedFormulaError:
            closed = None
        if closed is not None:
            err = math.hypot(geo[0] - closed[0], geo[1] - closed[1])
            scale = max(1.0, math.hypot(*geo), math.hypot(*closed))
            if err > 1e-9 * scale:
                raise InternalConsistencyError(
                    f"closed-form and geometric endpoints disagree: {geo} vs {closed}")
        pts.append(geo)
    (xa, ya), (xb, yb) = pts
    mid = ((xa + xb) / 2.0, (ya + yb) / 2.0)
    amp = float(u_on_grid(sol.tau, mid[0], mid[1], t))
    return StemReport(t=t, endpoint_a=(xa, ya), endpoint_b=(xb, yb),
                      length=math.hypot(xa - xb, ya - yb), midpoint=mid,
                      midpoint_amplitude=amp, valid=abs(t) >= t_min)


def stem_length_formula(sol: ResonantSolution, t: float) -> float:
    """Closed-form stem length |s_t t + s_L ln a12| sqrt(g) for the side of t."""
    if sol.spec.case is Case.GENERIC:
        raise UnsupportedCaseError("stem length requires a resonant case")
    if any(abs(v) > 0 for v in sol.params.xi0):
        raise UnsupportedFormulaError("closed forms assume zero phase constants")
    _, edge, junctions = _stem_side(sol, t)
    pair = set(edge)
    ends = tuple(sorted(next(iter(j - pair)) for j in junctions))
    case = sol.spec.case.value
    table = _closed_forms.SEGMENT.get(case, {})
    key = (tuple(sorted(edge)), ends)
    if key not in table:
        raise UnsupportedFormulaError(f"no closed-form length for {key}")
    k1, k2, k3 = sol.params.k
    p3 = sol.params.p[2]
    if sol.spec.branch is Branch.SECOND:
        p3 = -p3
    st, sL, g = table[key](k1, k2, k3, p3)
    return abs(st * t + sL * sol.log_a12) * math.sqrt(g)


def midpoint_amplitude(sol: ResonantSolution, t: float, t_min: float = 3.0) -> float:
    """u at the stem midpoint (approximates the stem amplitude for |t| >> 0)."""
    return stem_endpoints(sol, t, t_min=t_min).midpoint_amplitude


def cross_section(sol: ResonantSolution, t: float, line, s_range=None,
                  n_samples: int = 801, anchor=None):
    """Sample u along a line, parametrized by arclength from the anchor.

    line is an ArmDescriptor or raw (A, B, C) coefficients.  The anchor
    defaults to the stem midpoint at time t; its projection onto the line is
    arclength zero.  Returns a list of (s, u) pairs.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    if isinstance(line, ArmDescriptor):
        line = line.line_coeffs(t)
    A, B, C = normalize_line(line)
    if anchor is None:
        anchor = stem_endpoints(sol, t).midpoint
    # foot of the anchor on the line
    d = A * anchor[0] + B * anchor[1] + C
    foot = (anchor[0] - d * A, anchor[1] - d * B)
    direction = (-B, A)
    if s_range is None:
        s_range = (-20.0, 20.0)
    s = np.linspace(s_range[0], s_range[1], n_samples)
    xs = foot[0] + s * direction[0]
    ys = foot[1] + s * direction[1]
    u = u_on_grid(sol.tau, xs, ys, t)
    return list(zip(s.tolist(), np.asarray(u).tolist()))


@dataclass(frozen=True)
class VelocityRow:
    label: str
    hat: bool
    vx: float | None
    vy: float | None
    amplitude: float


def velocity_table(sol: ResonantSolution) -> list[VelocityRow]:
    """Amplitude and intercept-velocity pair of every arm/stem species.

    The x entry is the speed of the trajectory's intersection with a fixed
    horizontal line (-W/A), the y entry with a fixed vertical line (-W/B);
    a vanishing normal component makes that entry undefined (None).
    """
    cat = arm_catalog(sol)
    rows = {}
    arms = [a for _, a in cat.before] + [a for _, a in cat.after]
    arms += [cat.stem_past, cat.stem_future]
    for arm in arms:
        key = (arm.label, arm.hat)
        if key in rows:
            continue
        vx, vy = arm.velocity
        rows[key] = VelocityRow(label=arm.label_str(hat_mark=False), hat=arm.hat,
                                vx=vx, vy=vy, amplitude=arm.amplitude)
    return [rows[k] for k in sorted(rows, key=lambda kk: (len(kk[0]), kk[0], kk[1]))]


def parse_arm_label(text: str) -> tuple[tuple[int, ...], bool]:
    """Parse labels like "3", "1+3", "1+2-3", "1+2+3^" (trailing ^ = hat)."""
    text = text.strip()
    hat = text.endswith("^")
    if hat:
        text = text[:-1]
    out = []
    sign, num = 1, ""
    for ch in text + "+":
        if ch in "+-":
            if num:
                out.append(sign * int(num))
            sign = -1 if ch == "-" else 1
            num = ""
        elif ch.isdigit():
            num += ch
        else:
            raise ValueError(f"invalid arm label: {text!r}")
    if not out:
        raise ValueError(f"invalid arm label: {text!r}")
    return tuple(out), hat


def find_arm(sol: ResonantSolution, label, hat: bool | None = None) -> ArmDescriptor:
    """Look up an arm/stem descriptor by label among the catalog species."""
    if isinstance(label, str):
        label, hat_parsed = parse_arm_label(label)
        hat = hat_parsed if hat is None else hat
    cat = arm_catalog(sol)
    arms = [a for _, a in cat.before] + [a for _, a in cat.after]
    arms += [cat.stem_past, cat.stem_future]
    for arm in arms:
        if arm.label == tuple(label) and (hat is None or arm.hat == hat):
            return arm
    raise KeyError(f"no arm with label {label} (hat={hat}) in this catalog")
