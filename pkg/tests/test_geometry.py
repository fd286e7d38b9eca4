"""Arm catalogs, stem endpoints/lengths, amplitudes, sections, velocities."""

import math

import numpy as np
import pytest

from kpii_stem import (
    PARALLEL,
    Case,
    Region,
    arm_catalog,
    arm_profile,
    build_case,
    cross_section,
    find_arm,
    intersect_lines,
    make_generic,
    midpoint_amplitude,
    parse_arm_label,
    stem_endpoints,
    stem_length_formula,
    trajectory_line,
    velocity_table,
)
from kpii_stem.errors import UnsupportedCaseError, UnsupportedFormulaError
from kpii_stem.geometry import normalize_line

from test_catalog import RESONANT_CASES, draw_params
from kpii_stem import Branch, CaseSpec, build_solution

EXPECTED_STEMS = {
    "c2_1": (((1, 2, 3), True), ((3,), False)),
    "c2_1_alt": (((1, 3), True), ((2, 3), True)),
    "c2_2": (((2, 3), False), ((1, 3), True)),
    "c2_3": (((1, 3), False), ((2, 3), True)),
    "c2_4": (((1, 2, 3), True), ((3,), False)),
    "w2": (((1, -3), False), ((2, -3), False)),
    "m2": (((2, -3), True), ((1, 3), False)),
    "c3_1": (((1, -3), False), ((2,), False)),
    "c3_2": (((2,), False), ((1, 3), False)),
}


def test_reference_catalog_regions(solutions):
    cat = arm_catalog(solutions["c2_1"])
    before = {(r, a.label, a.hat) for r, a in cat.before}
    assert before == {
        (Region.Y_NEG, (1, 3), True), (Region.Y_NEG, (2,), False),
        (Region.Y_POS, (1,), False), (Region.Y_POS, (2, 3), True),
    }
    after = {(r, a.label, a.hat) for r, a in cat.after}
    assert after == {
        (Region.Y_NEG, (1, 3), True), (Region.Y_NEG, (2,), True),
        (Region.Y_POS, (1,), True), (Region.Y_POS, (2, 3), True),
    }
    assert cat.regime_before == "y"


def test_alternate_regime_listing(solutions):
    cat = arm_catalog(solutions["c2_1_alt"])
    assert cat.regime_before == "x"
    before = {(r, a.label, a.hat) for r, a in cat.before}
    assert before == {
        (Region.X_NEG, (1,), True), (Region.X_NEG, (2,), False),
        (Region.X_POS, (3,), False), (Region.X_POS, (1, 2, 3), True),
    }


@pytest.mark.parametrize("name", sorted(EXPECTED_STEMS))
def test_stem_species(name, solutions):
    cat = arm_catalog(solutions[name])
    (lp, hp), (lf, hf) = EXPECTED_STEMS[name]
    assert (cat.stem_past.label, cat.stem_past.hat) == (lp, hp)
    assert (cat.stem_future.label, cat.stem_future.hat) == (lf, hf)
    assert (cat.stem_past.label, cat.stem_past.hat) != (
        cat.stem_future.label, cat.stem_future.hat)


def test_mixed_three_resonant_catalog(solutions):
    cat = arm_catalog(solutions["c3_2"])
    before = {(r, a.label) for r, a in cat.before}
    assert before == {(Region.Y_NEG, (2, 3)), (Region.Y_POS, (1,)),
                      (Region.Y_POS, (3,)), (Region.Y_POS, (1, -2))}
    assert not any(a.hat for _, a in cat.before)


def test_catalog_requires_resonant_case():
    gen = make_generic((1.0, 2.0, 3.0), (0.2, -0.3, 0.1))
    with pytest.raises(UnsupportedCaseError):
        arm_catalog(gen)


def test_arm_profile_values(solutions):
    sol = solutions["c2_1"]
    cat = arm_catalog(sol)
    stem = cat.stem_past
    assert stem.amplitude == pytest.approx(169.0 / 18.0, rel=1e-14)
    # on the trajectory line the profile equals the amplitude
    t = -2.0
    A, B, C = stem.line_coeffs(t)
    y0 = 1.0
    x0 = -(B * y0 + C) / A
    assert arm_profile(stem, sol, (x0, y0, t)) == pytest.approx(
        stem.amplitude, rel=1e-13)
    # quarter amplitude where the phase combination reaches 2 asech(1/2)
    xi = 2.0 * math.acosh(2.0)
    x1 = -(B * y0 + C - xi) / A
    assert arm_profile(stem, sol, (x1, y0, t)) == pytest.approx(
        stem.amplitude / 4.0, rel=1e-12)


def test_trajectory_line_basics(solutions):
    sol = solutions["c2_1"]
    arm1 = find_arm(sol, "1", hat=False)
    A, B, C = arm1.line_coeffs(0.0)
    assert C == 0.0  # through the origin at t = 0 with zero phase constants
    stem = arm_catalog(sol).stem_past
    _, _, C = stem.line_coeffs(0.0)
    assert C == pytest.approx(math.log(sol.a12), rel=1e-15)
    An, Bn, _ = trajectory_line(arm1, 0.0)
    assert math.hypot(An, Bn) == pytest.approx(1.0, rel=1e-15)
    assert An > 0 or (An == 0 and Bn > 0)


def test_intersect_lines_basics():
    assert intersect_lines((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)) == (0.0, -0.0) \
        or intersect_lines((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)) == (-0.0, 0.0) \
        or intersect_lines((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)) == (0.0, 0.0)
    assert intersect_lines((1.0, 2.0, 0.0), (2.0, 4.0, 1.0)) is PARALLEL


def test_junction_matches_closed_form_coordinates(solutions):
    # one written-out endpoint: meeting point of the first arm and the
    # hatted 2+3 arm of the strong reference set at t = -2
    sol = solutions["c2_1"]
    k1, k2, k3 = sol.params.k
    p3 = sol.params.p[2]
    L = math.log(sol.a12)
    t = -2.0
    arm1 = find_arm(sol, "1", hat=False)
    arm23 = find_arm(sol, "2+3", hat=True)
    pt = intersect_lines(trajectory_line(arm1, t), trajectory_line(arm23, t))
    want_x = ((k3**2 + 4 * k1 * k2 + 4 * k2 * k3 - 2 * p3
               + (4 * k2 * p3 - 4 * p3 * k1) / k3 - 3 * p3**2 / k3**2) * t
              - (k1 * k3 + k3**2 + p3) * L
              / (k3 * (k1 + k2 + k3) * (k2 + k3)))
    want_y = (L / ((k1 + k2 + k3) * (k2 + k3))
              + (6 * p3 / k3 + 4 * k1 - 4 * k2 + 2 * k3) * t)
    assert pt[0] == pytest.approx(want_x, rel=1e-10)
    assert pt[1] == pytest.approx(want_y, rel=1e-10)


def test_stem_report_zero_time(solutions):
    rep = stem_endpoints(solutions["c3_1"], 0.0)
    assert rep.endpoint_a == (0.0, 0.0) or rep.endpoint_a == (-0.0, 0.0)
    assert rep.length == 0.0
    assert not rep.valid


def test_stem_report_fields(solutions):
    rep = stem_endpoints(solutions["c2_1"], -5.0)
    assert rep.valid
    mx = 0.5 * (rep.endpoint_a[0] + rep.endpoint_b[0])
    my = 0.5 * (rep.endpoint_a[1] + rep.endpoint_b[1])
    assert rep.midpoint == (mx, my)
    d = math.hypot(rep.endpoint_a[0] - rep.endpoint_b[0],
                   rep.endpoint_a[1] - rep.endpoint_b[1])
    assert rep.length == pytest.approx(d, rel=1e-15)
    inside = stem_endpoints(solutions["c2_1"], 1.0)
    assert not inside.valid


@pytest.mark.parametrize("name", sorted(EXPECTED_STEMS))
def test_length_formula_matches_distance(name, solutions):
    sol = solutions[name]
    for t in (-20.0, -5.0, -1.0, 1.0, 5.0, 20.0):
        rep = stem_endpoints(sol, t)
        lf = stem_length_formula(sol, t)
        assert lf == pytest.approx(rep.length, rel=1e-9, abs=1e-12)


def test_length_formula_examples(solutions):
    sol = solutions["c3_1"]
    k1, k2, k3 = sol.params.k
    p3 = sol.params.p[2]
    want = 4.0 * abs(k2) * math.sqrt(k1**2 + 1 - 2 * k1 * p3 / k3 + p3**2 / k3**2)
    assert stem_length_formula(sol, -1.0) == pytest.approx(want, rel=1e-12)
    assert stem_length_formula(sol, 0.0) == 0.0

    sol = solutions["w2"]
    rep = stem_endpoints(sol, -5.0)
    assert stem_length_formula(sol, -5.0) == pytest.approx(rep.length, rel=1e-10)

    # mixed case future side: length grows as 4 |t (k1+k3)/k3| sqrt(...)
    sol = solutions["m2"]
    k1, k2, k3 = sol.params.k
    p3 = sol.params.p[2]
    want = 4.0 * abs(10.0 * (k1 + k3) / k3) * math.sqrt(k3**2 + (k1 * k3 + p3)**2)
    assert stem_length_formula(sol, 10.0) == pytest.approx(want, rel=1e-12)


def test_length_formula_absent_for_generic():
    gen = make_generic((1.0, 2.0, 3.0), (0.2, -0.3, 0.1))
    with pytest.raises((UnsupportedFormulaError, UnsupportedCaseError)):
        stem_length_formula(gen, 1.0)


def test_length_formula_rejects_phase_constants():
    sol = build_case(Case.C3_1, (2.0, 4.0 / 3.0, 1.0), 0.0, xi0=(0.3, 0.0, 0.0))
    with pytest.raises(UnsupportedFormulaError):
        stem_length_formula(sol, 5.0)


# --- midpoint amplitude evolution: frozen closed-form oracles ---------------
# evaluated in 60-digit arithmetic; the raw exponentials overflow doubles

import mpmath


def _mp(fn):
    def wrapped(t):
        with mpmath.workdps(60):
            return float(fn(mpmath.mpf(t)))
    return wrapped


def _alpha(i):
    a, b = {1: (43, 867), 2: (851, 59), 3: (298, 612), 4: (655, 255),
            5: (553, 357), 6: (549.25, 360.75), 7: (484.25, 425.75),
            8: (253.5, 656.5), 9: (845, 65), 10: (188.5, 721.5),
            11: (614.25, 295.75)}[i]
    # exponents over the common denominator 910
    return mpmath.mpf(35) ** (mpmath.mpf(a) / 910) * mpmath.mpf(26) ** (mpmath.mpf(b) / 910)


@_mp
def strong_past_amp(t):
    e = mpmath.exp
    F1 = (2293200 * _alpha(1) * e(272 * t / 9) + 425880 * _alpha(2) * e(304 * t / 9)
          + 6604780 * _alpha(3) * e(64 * t / 3) + 5157880 * _alpha(4) * e(80 * t / 9)
          + 4022200 * _alpha(5) * e(112 * t / 9))
    den = 6084 * (_alpha(5) * e(112 * t / 9) + _alpha(4) * e(80 * t / 9)
                  + 35 * _alpha(3) / 26 * e(64 * t / 3) + 70) ** 2
    return (F1 + 279897800) / den


@_mp
def strong_future_amp(t):
    e = mpmath.exp
    F2 = (_alpha(6) * e(520 * t / 9)
          + mpmath.mpf(35525) / 116792 * _alpha(7) * e(1040 * t / 9)
          + mpmath.mpf(595) / 1123 * _alpha(8) * e(78 * t)
          + mpmath.mpf(117) / 1123 * _alpha(9) * e(338 * t / 9)
          + mpmath.mpf(42875) / 379574 * _alpha(10) * e(1222 * t / 9)
          + mpmath.mpf(1521) / 78610)
    den = 1863225 * (_alpha(9) * e(520 * t / 9)
                     + mpmath.mpf(26) / 35 * _alpha(11) * e(182 * t / 9)
                     + mpmath.mpf(35) / 13 * _alpha(6) * e(78 * t) + 26) ** 2
    return 3719825200 * e(182 * t / 9) * F2 / den


@_mp
def weak_past_amp(t):
    e, s3 = mpmath.exp, mpmath.sqrt(3)
    return ((30 * s3 * e(4 * t) + 6 * s3 * e(12 * t) + 30 * e(8 * t) + 54)
            / (3 * e(4 * t) + (e(8 * t) + 2) * s3) ** 2)


@_mp
def weak_future_amp(t):
    e, s3 = mpmath.exp, mpmath.sqrt(3)
    return (6 * (5 * s3 * e(24 * t) + e(36 * t) + s3 + 13 * e(12 * t))
            * e(12 * t) / (2 * s3 * e(24 * t) + s3 + 3 * e(12 * t)) ** 2)


@_mp
def mixed_past_amp(t):
    e, s3 = mpmath.exp, mpmath.sqrt(3)
    num = 3 * e(-3 * t / 2) * (729 * e(-15 * t / 2) + 1053 * e(-6 * t) * s3
                               + 675 * e(-9 * t / 2) + 243 * e(-3 * t) * s3
                               + 144 * e(-3 * t / 2) + 4 * s3)
    den = 2 * (s3 * e(-3 * t / 2) + 54 * s3 * e(-9 * t / 2) + 9 * e(-3 * t) + 3) ** 2
    return num / den


@_mp
def mixed_future_amp(t):
    e = mpmath.exp
    num = (36 * e(-15 * t / 2) + 144 * e(-6 * t) + 81 * e(-9 * t / 2)
           + 25 * e(-3 * t) + 13 * e(-3 * t / 2) + 1)
    den = 2 * (9 * e(-9 * t / 2) + e(-3 * t) + e(-3 * t / 2) + 2) ** 2
    return num / den


@_mp
def weak3_past_amp(t):
    e = mpmath.exp
    return (2 * e(-128 * t / 27) * (9 * e(-160 * t / 27) + 5 * e(-16 * t / 3)
                                    + 45 * e(-16 * t / 27) + 16)
            / (9 * (1 + 2 * e(-16 * t / 3) + e(-128 * t / 27)) ** 2))


@_mp
def weak3_future_amp(t):
    e = mpmath.exp
    return (2 * (9 * e(-10 * t / 3) + 40 * e(-8 * t / 3) + 10 * e(-2 * t / 3) + 16)
            / (9 * (2 + e(-8 * t / 3) + e(-2 * t / 3)) ** 2))


@pytest.mark.parametrize("name,oracles", [
    ("c2_1", (strong_past_amp, strong_future_amp)),
    ("w2", (weak_past_amp, weak_future_amp)),
    ("m2", (mixed_past_amp, mixed_future_amp)),
    ("c3_1", (weak3_past_amp, weak3_future_amp)),
])
def test_midpoint_amplitude_evolution(name, oracles, solutions):
    sol = solutions[name]
    past, future = oracles
    for t in (-8.0, -3.0, -1.5):
        assert midpoint_amplitude(sol, t) == pytest.approx(past(t), abs=1e-8)
    for t in (1.5, 3.0, 8.0, 10.0):
        assert midpoint_amplitude(sol, t) == pytest.approx(future(t), abs=1e-8)


@pytest.mark.parametrize("name,limits", [
    ("c2_1", (169.0 / 18.0, 8.0 / 9.0)),
    ("w2", (4.5, 0.5)),
    ("m2", (0.125, 0.125)),
    ("c3_1", (0.5, 8.0 / 9.0)),
])
def test_midpoint_amplitude_limits(name, limits, solutions):
    sol = solutions[name]
    assert midpoint_amplitude(sol, -20.0) == pytest.approx(limits[0], abs=1e-3)
    assert midpoint_amplitude(sol, 20.0) == pytest.approx(limits[1], abs=1e-3)


def test_midpoint_limits_every_reference_set(solutions):
    for name, sol in solutions.items():
        cat = arm_catalog(sol)
        assert abs(midpoint_amplitude(sol, -20.0) - cat.stem_past.amplitude) <= 1e-3
        assert abs(midpoint_amplitude(sol, 20.0) - cat.stem_future.amplitude) <= 1e-3


# --- cross sections ----------------------------------------------------------

def test_perpendicular_section_matches_stem_profile(solutions):
    sol = solutions["c2_1"]
    t = 1.0
    rep = stem_endpoints(sol, t)
    stem = arm_catalog(sol).stem_future
    A, B, C = trajectory_line(stem, t)
    mx, my = rep.midpoint
    perp = (-B, A, B * mx - A * my)
    pts = cross_section(sol, t, perp, s_range=(-5, 5), n_samples=801,
                        anchor=rep.midpoint)
    dev = 0.0
    An, Bn, Cn = normalize_line(perp)
    dproj = An * mx + Bn * my + Cn
    foot = (mx - dproj * An, my - dproj * Bn)
    for s, u in pts:
        x = foot[0] - Bn * s
        y = foot[1] + An * s
        dev = max(dev, abs(u - arm_profile(stem, sol, (x, y, t))))
    assert dev < 1e-2


def test_along_stem_extrema(solutions):
    # (set, t, target value, whether the maximum is an interior hump or the
    # level of the plateau between the higher junction regions)
    checks = [
        ("c2_1", -2.0, 9.389, "hump"),
        ("c2_1", 1.0, 0.889, "plateau"),
        ("w2", -2.0, 4.499, "hump"),
        ("w2", 2.0, 0.500, "plateau"),
        ("m2", -8.0, 0.125, "plateau"),
        ("m2", 10.0, 0.125, "plateau"),
    ]
    for name, t, target, kind in checks:
        sol = solutions[name]
        cat = arm_catalog(sol)
        stem = cat.stem_past if t < 0 else cat.stem_future
        rep = stem_endpoints(sol, t)
        frac = 0.45 if kind == "hump" else 0.25
        half = max(rep.length * frac, 1.5)
        pts = cross_section(sol, t, stem, s_range=(-half, half),
                            n_samples=2001, anchor=rep.midpoint)
        u = np.array([v for _, v in pts])
        i = int(np.argmax(u))
        if kind == "hump":
            assert 0 < i < len(u) - 1, (name, t)
        assert u[i] == pytest.approx(target, abs=1e-2), (name, t)


def test_section_far_from_structure_vanishes(solutions):
    sol = solutions["c2_1"]
    # a vertical line far outside every arm at t = 0
    pts = cross_section(sol, 0.0, (1.0, 0.0, 500.0), s_range=(-5, 5),
                        n_samples=11, anchor=(0.0, 0.0))
    assert max(abs(u) for _, u in pts) < 1e-12


def test_cross_section_validation(solutions):
    with pytest.raises(ValueError):
        cross_section(solutions["c2_1"], 0.0, (1.0, 0.0, 0.0), n_samples=1)


# --- velocities --------------------------------------------------------------

def test_velocity_table_single_and_pair_rows(solutions):
    sol = solutions["c2_1"]
    k, p = sol.params.k, sol.params.p
    rows = {(r.label, r.hat): r for r in velocity_table(sol)}
    r1 = rows[("1", False)]
    assert r1.amplitude == pytest.approx(k[0] ** 2 / 2.0, rel=1e-14)
    assert r1.vx == pytest.approx(k[0] ** 2 + 3.0 * p[0] ** 2 / k[0] ** 2, rel=1e-12)
    assert r1.vy == pytest.approx((k[0] ** 4 + 3.0 * p[0] ** 2) / (k[0] * p[0]),
                                  rel=1e-12)
    r23 = rows[("2+3", True)]
    ki, kj, pi, pj = k[1], k[2], p[1], p[2]
    want_vx = (ki**2 - ki * kj + kj**2
               + (3 * pi**2 * kj + 3 * pj**2 * ki) / (ki * kj * (ki + kj)))
    want_vy = ((ki**3 + kj**3) / (pi + pj)
               + (3 * pi**2 * kj + 3 * pj**2 * ki) / (ki * kj * (pi + pj)))
    assert r23.vx == pytest.approx(want_vx, rel=1e-12)
    assert r23.vy == pytest.approx(want_vy, rel=1e-12)
    r123 = rows[("1+2+3", True)]
    assert r123.amplitude == pytest.approx(169.0 / 18.0, rel=1e-14)
    d1 = 3 * (p[0] ** 2 * k[1] * k[2] + p[1] ** 2 * k[0] * k[2]
              + p[2] ** 2 * k[0] * k[1])
    K = sum(k)
    want_vx = (k[0] ** 3 + k[1] ** 3 + k[2] ** 3) / K + d1 / (k[0] * k[1] * k[2] * K)
    assert r123.vx == pytest.approx(want_vx, rel=1e-12)
    P = sum(p)
    want_vy = (k[0] ** 3 + k[1] ** 3 + k[2] ** 3) / P + d1 / (k[0] * k[1] * k[2] * P)
    assert r123.vy == pytest.approx(want_vy, rel=1e-12)


def test_velocity_table_difference_rows(solutions):
    sol = solutions["m2"]
    k, p = sol.params.k, sol.params.p
    rows = {(r.label, r.hat): r for r in velocity_table(sol)}
    r = rows[("2-3", True)]
    ki, kj, pi, pj = k[1], k[2], p[1], p[2]
    want_vx = (ki**2 + ki * kj + kj**2
               + (3 * pi**2 * kj - 3 * pj**2 * ki) / (ki * kj * (ki - kj)))
    assert r.vx == pytest.approx(want_vx, rel=1e-12)
    r = rows[("1-2+3", False)]
    d3 = 3 * (p[0] ** 2 * k[1] * k[2] - p[1] ** 2 * k[0] * k[2]
              + p[2] ** 2 * k[0] * k[1])
    K = k[0] - k[1] + k[2]
    want_vx = (k[0] ** 3 - k[1] ** 3 + k[2] ** 3) / K + d3 / (k[0] * k[1] * k[2] * K)
    assert r.vx == pytest.approx(want_vx, rel=1e-12)


def test_velocity_undefined_axis(solutions):
    # the third transverse parameter vanishes in the weak 3-resonant
    # reference set, so the third arm's y-intercept velocity is undefined
    rows = {(r.label, r.hat): r for r in velocity_table(solutions["c3_1"])}
    assert rows[("3", False)].vy is None
    assert rows[("3", False)].vx is not None


def test_velocity_normal_speed_identity(solutions):
    # 1/s^2 = 1/vx^2 + 1/vy^2 with s the line's normal speed -W/|n|
    for sol in solutions.values():
        for row_arm in [arm_catalog(sol).stem_past, arm_catalog(sol).stem_future]:
            vx, vy = row_arm.velocity
            if vx is None or vy is None or row_arm.W == 0:
                continue
            s = -row_arm.W / math.hypot(row_arm.A, row_arm.B)
            assert 1.0 / s**2 == pytest.approx(1.0 / vx**2 + 1.0 / vy**2,
                                               rel=1e-10)


# --- structural invariants ---------------------------------------------------

def _normalized_row(line):
    A, B, C = line
    nrm = math.sqrt(A * A + B * B + C * C)
    return (A / nrm, B / nrm, C / nrm)


@pytest.mark.parametrize("name", sorted(EXPECTED_STEMS))
def test_triple_concurrency(name, solutions):
    from kpii_stem.geometry import _arm_from_terms
    sol = solutions[name]
    cat = arm_catalog(sol)
    eps_idx = {eps: i for i, (eps, _) in enumerate(sol.template)}
    for t in (-40.0, -20.0, -5.0, -3.0, 3.0, 5.0, 20.0, 40.0):
        junctions = cat.past_junctions if t <= 0 else cat.future_junctions
        for junction in junctions:
            idxs = [eps_idx[e] for e in junction]
            lines = [_arm_from_terms(sol, a, b).line_coeffs(t)
                     for i, a in enumerate(idxs) for b in idxs[i + 1:]]
            M = np.array([_normalized_row(l) for l in lines])
            assert abs(np.linalg.det(M)) < 1e-9


@pytest.mark.parametrize("name", sorted(EXPECTED_STEMS))
def test_length_affine_slope(name, solutions):
    sol = solutions[name]
    ts = np.linspace(-30.0, -20.0, 11)
    ls = np.array([stem_endpoints(sol, float(t)).length for t in ts])
    slope = np.polyfit(ts, ls, 1)[0]
    # closed form |st t + sL L| sqrt(g): slope magnitude is |st| sqrt(g)
    l1, l2 = stem_length_formula(sol, -30.0), stem_length_formula(sol, -20.0)
    want = (l2 - l1) / 10.0
    assert slope == pytest.approx(want, rel=1e-6)
    resid = ls - np.polyval(np.polyfit(ts, ls, 1), ts)
    assert np.abs(resid).max() < 1e-8 * max(1.0, np.abs(ls).max())


def test_endpoint_pairs_stay_distinct_near_reconnection(solutions):
    sol = solutions["c2_1"]
    dmin = math.inf
    for t in np.linspace(-1.0, 1.0, 201):
        past = stem_endpoints(sol, -abs(t) if t <= 0 else -t)  # past side
        future = stem_endpoints(sol, abs(t) if t > 0 else -t)
        # evaluate both species at the same instant
        p = stem_endpoints(sol, min(t, -1e-12))
        f = stem_endpoints(sol, max(t, 1e-12))
        for a in (p.endpoint_a, p.endpoint_b):
            for b in (f.endpoint_a, f.endpoint_b):
                dmin = min(dmin, math.hypot(a[0] - b[0], a[1] - b[1]))
    assert dmin > 1e-4

    rep = stem_endpoints(solutions["c3_1"], 0.0)
    assert rep.length == 0.0


@pytest.mark.parametrize("case", RESONANT_CASES)
def test_random_draw_endpoint_consistency(case):
    """Closed-form vs intersection endpoints over random admissible draws."""
    rng = np.random.default_rng(abs(hash(("geo", case.value))) % 2**32)
    done = 0
    while done < 15:
        params = draw_params(rng, case)
        sol = build_solution(params, CaseSpec(case, Branch.FIRST))
        try:
            arm_catalog(sol)
        except Exception:
            continue  # geometrically degenerate draw; resample
        for t in (-20.0, -5.0, -1.0, 1.0, 5.0, 20.0):
            rep = stem_endpoints(sol, t)  # raises on dual-path disagreement
            lf = stem_length_formula(sol, t)
            assert lf == pytest.approx(rep.length, rel=1e-9, abs=1e-12)
        done += 1


def test_second_branch_endpoints(solutions):
    sol2 = build_case(Case.W2, (1.0, -1.0, -2.0), 0.5, branch=Branch.SECOND)
    for t in (-5.0, 5.0):
        rep = stem_endpoints(sol2, t)  # internal dual-path check must pass
        assert stem_length_formula(sol2, t) == pytest.approx(rep.length, rel=1e-9)


# --- labels ------------------------------------------------------------------

def test_parse_arm_label():
    assert parse_arm_label("3") == ((3,), False)
    assert parse_arm_label("1+3") == ((1, 3), False)
    assert parse_arm_label("1+2-3") == ((1, 2, -3), False)
    assert parse_arm_label("1+2+3^") == ((1, 2, 3), True)
    with pytest.raises(ValueError):
        parse_arm_label("abc")


def test_find_arm(solutions):
    sol = solutions["w2"]
    arm = find_arm(sol, "1+2-3^")
    assert arm.label == (1, 2, -3) and arm.hat
    with pytest.raises(KeyError):
        find_arm(sol, "1+2+3^")


def test_degenerate_line_rejected(solutions):
    from kpii_stem.errors import DegenerateLineError
    with pytest.raises(DegenerateLineError):
        normalize_line((0.0, 0.0, 1.0))
    with pytest.raises(DegenerateLineError):
        cross_section(solutions["c2_1"], 0.0, (0.0, 0.0, 1.0),
                      anchor=(0.0, 0.0))


def test_generic_resonance_is_elastic():
    from kpii_stem import classify_resonance
    gen = make_generic((1.0, 2.0, 3.0), (0.2, -0.3, 0.1))
    kinds = classify_resonance(gen.params, gen.spec).kinds
    assert all(k.value == "elastic" for k in kinds.values())
