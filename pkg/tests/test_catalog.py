"""Resonance-case construction: constraints, coefficients, templates."""

import math
from fractions import Fraction

import numpy as np
import pytest

from kpii_stem import (
    INFINITE,
    Branch,
    Case,
    CaseSpec,
    ResonanceKind,
    build_case,
    build_solution,
    classify_resonance,
    make_generic,
    omega,
    phase_shift_param,
    resolve_constraints,
    u_on_grid,
    kp_residual,
)
from kpii_stem.errors import (
    DegenerateParameterError,
    InadmissibleParameterError,
)

RESONANT_CASES = [Case.C2_1, Case.C2_2, Case.C2_3, Case.C2_4,
                  Case.W2, Case.M2, Case.C3_1, Case.C3_2]

# (a12, a13, a23) limit pattern per case: "fin" finite positive, 0, or inf
PATTERNS = {
    Case.C2_1: ("fin", "inf", "inf"), Case.C2_2: ("fin", "inf", "inf"),
    Case.C2_3: ("fin", "inf", "inf"), Case.C2_4: ("fin", "inf", "inf"),
    Case.W2: ("fin", 0, 0), Case.M2: ("fin", "inf", 0),
    Case.C3_1: (0, 0, 0), Case.C3_2: (0, "inf", "inf"),
}


def draw_params(rng, case, branch=Branch.FIRST, max_tries=200):
    """Random admissible (k, p3) for the case."""
    for _ in range(max_tries):
        k = rng.uniform(0.4, 2.5, 3) * rng.choice([-1.0, 1.0], 3)
        if min(abs(k[0] - k[1]), abs(k[0] - k[2]), abs(k[1] - k[2])) < 0.15:
            continue
        p3 = rng.uniform(-2.0, 2.0)
        try:
            params = resolve_constraints(k, p3, CaseSpec(case, branch))
        except (InadmissibleParameterError, DegenerateParameterError):
            continue
        return params
    raise RuntimeError("no admissible draw found")


def test_omega_values():
    assert omega(1.0, 0.0) == -1.0
    assert omega(-1.0, 0.0) == 1.0
    want = Fraction(499, 108)
    assert omega(-4.0 / 3.0, 1.0) == pytest.approx(float(want), rel=1e-15)


def test_omega_zero_wavenumber():
    with pytest.raises(DegenerateParameterError):
        omega(0.0, 1.0)


def test_phase_shift_kdv_reduction():
    assert phase_shift_param(1.0, 0.0, 2.0, 0.0) == pytest.approx(1.0 / 9.0, rel=1e-15)


def test_phase_shift_distinguished_values():
    # opposite wave numbers with opposite tilts: denominator vanishes alone
    assert phase_shift_param(1.0, 0.5, -1.0, -0.5) is INFINITE
    # equal solitons: numerator vanishes alone
    assert phase_shift_param(1.0, 0.5, 1.0, 0.5) == 0.0


@pytest.mark.parametrize("case", RESONANT_CASES)
@pytest.mark.parametrize("branch", [Branch.FIRST, Branch.SECOND])
def test_constraint_fidelity_random_draws(case, branch):
    """Resolved (p1, p2) reproduce the case's coefficient limits exactly."""
    rng = np.random.default_rng(abs(hash((case.value, branch.value))) % 2**32)
    want12, want13, want23 = PATTERNS[case]
    for _ in range(100):
        params = draw_params(rng, case, branch)
        k, p = params.k, params.p
        a13 = phase_shift_param(k[0], p[0], k[2], p[2])
        a23 = phase_shift_param(k[1], p[1], k[2], p[2])
        a12 = phase_shift_param(k[0], p[0], k[1], p[1])
        for got, want in ((a12, want12), (a13, want13), (a23, want23)):
            if want == "inf":
                assert got is INFINITE
            elif want == 0:
                assert got == 0.0
            else:
                assert isinstance(got, float) and 0.0 < got < math.inf


@pytest.mark.parametrize("case", RESONANT_CASES)
def test_template_cardinality(case):
    rng = np.random.default_rng(abs(hash(case.value)) % 2**32)
    expected = {Case.C2_1: 5, Case.C2_2: 4, Case.C2_3: 4, Case.C2_4: 5,
                Case.W2: 5, Case.M2: 5, Case.C3_1: 4, Case.C3_2: 4}[case]
    for _ in range(10):
        params = draw_params(rng, case)
        sol = build_solution(params, CaseSpec(case))
        assert len(sol.tau) == expected
        assert all(c > 0 for _, c in sol.template)


def test_reference_resolution_exact_values():
    params = resolve_constraints((-1.0, -2.0, -4.0 / 3.0), 1.0, CaseSpec(Case.C2_1))
    assert params.p[0] == pytest.approx(37.0 / 12.0, rel=1e-15)
    assert params.p[1] == pytest.approx(-31.0 / 6.0, rel=1e-15)
    sol = build_solution(params, CaseSpec(Case.C2_1))
    assert sol.a12 == pytest.approx(35.0 / 26.0, rel=1e-15)

    params = resolve_constraints((1.0, -1.0, -2.0), -0.5, CaseSpec(Case.W2))
    sol = build_solution(params, CaseSpec(Case.W2))
    assert sol.a12 == pytest.approx(0.75, rel=1e-15)
    assert 0.0 < sol.a12 < math.inf

    params = resolve_constraints((2.0, 4.0 / 3.0, 1.0), 0.0, CaseSpec(Case.C3_1))
    assert params.p[0] == pytest.approx(-2.0, rel=1e-15)
    assert params.p[1] == pytest.approx(-4.0 / 9.0, rel=1e-15)


def test_inadmissible_a12_rejected():
    # sign-mirrored strong set with a12 = -1/2
    with pytest.raises(InadmissibleParameterError):
        resolve_constraints((-2.0 / 3.0, -1.0, 4.0 / 3.0), 2.0 / 3.0,
                            CaseSpec(Case.C2_2))


def test_generic_requires_its_own_constructor():
    with pytest.raises(DegenerateParameterError):
        resolve_constraints((1.0, 2.0, 3.0), 0.0, CaseSpec(Case.GENERIC))


def test_generic_template_has_eight_terms():
    sol = make_generic((1.0, 2.0, 3.0), (0.2, -0.3, 0.1))
    assert len(sol.template) == 8
    assert len(sol.tau) == 8


def test_generic_rejects_resonant_parameters():
    # on the strong manifold a13 is infinite: not representable generically
    params = resolve_constraints((-1.0, -2.0, -4.0 / 3.0), 1.0, CaseSpec(Case.C2_1))
    with pytest.raises(DegenerateParameterError):
        make_generic(params.k, params.p)


@pytest.mark.parametrize("case,kinds", [
    (Case.C2_1, {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.STRONG,
                 (2, 3): ResonanceKind.STRONG}),
    (Case.W2, {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.WEAK,
               (2, 3): ResonanceKind.WEAK}),
    (Case.M2, {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.STRONG,
               (2, 3): ResonanceKind.WEAK}),
    (Case.C3_1, {(1, 2): ResonanceKind.WEAK, (1, 3): ResonanceKind.WEAK,
                 (2, 3): ResonanceKind.WEAK}),
    (Case.C3_2, {(1, 2): ResonanceKind.WEAK, (1, 3): ResonanceKind.STRONG,
                 (2, 3): ResonanceKind.STRONG}),
])
def test_classification_table(case, kinds, solutions):
    name = case.value
    sol = solutions[name]
    got = classify_resonance(sol.params, sol.spec)
    assert got.kinds == kinds


def test_single_soliton_limit_along_first_phase(solutions):
    # far down the xi_1 = 0 line the weak 3-resonant solution is the plain
    # single-soliton profile
    sol = solutions["c3_1"]
    k1, p1 = sol.params.k[0], sol.params.p[0]
    w1 = sol.params.omegas[0]
    t, y = -8.0, -50.0
    x = -(p1 * y + w1 * t) / k1
    u = float(u_on_grid(sol.tau, x, y, t))
    assert u == pytest.approx(k1 * k1 / 2.0, rel=1e-6)


def test_reference_solution_residual(solutions):
    rng = np.random.default_rng(2)
    pts = np.column_stack([rng.uniform(-50, 50, 100),
                           rng.uniform(-50, 50, 100),
                           rng.uniform(-10, 10, 100)])
    assert kp_residual(solutions["c2_1"], pts).max_abs_residual < 1e-8


@pytest.mark.parametrize("case", RESONANT_CASES)
def test_branch_mirror_symmetry(case):
    """Second branch at -p3 is the first branch reflected in y."""
    rng = np.random.default_rng(abs(hash(("mirror", case.value))) % 2**32)
    params = draw_params(rng, case, Branch.FIRST)
    k, p3 = params.k, params.p[2]
    first = build_solution(params, CaseSpec(case, Branch.FIRST))
    second = build_case(case, k, -p3, branch=Branch.SECOND)
    pts = rng.uniform(-15, 15, (40, 3))
    u1 = u_on_grid(first.tau, pts[:, 0], pts[:, 1], pts[:, 2])
    u2 = u_on_grid(second.tau, pts[:, 0], -pts[:, 1], pts[:, 2])
    assert np.abs(u1 - u2).max() < 1e-11


def test_phase_constants_shift_single_arm():
    delta = 0.8
    shifted = build_case(Case.C3_1, (2.0, 4.0 / 3.0, 1.0), 0.0,
                         xi0=(delta, 0.0, 0.0))
    # still an exact solution, and the first arm's ridge now sits on
    # xi_1 + delta = 0
    rng = np.random.default_rng(9)
    pts = np.column_stack([rng.uniform(-30, 30, 100),
                           rng.uniform(-30, 30, 100),
                           rng.uniform(-5, 5, 100)])
    assert kp_residual(shifted, pts).max_abs_residual < 1e-8
    k1, p1 = shifted.params.k[0], shifted.params.p[0]
    w1 = shifted.params.omegas[0]
    t, y = -8.0, -50.0
    x = -(p1 * y + w1 * t + delta) / k1
    assert float(u_on_grid(shifted.tau, x, y, t)) == pytest.approx(
        k1 * k1 / 2.0, rel=1e-6)
