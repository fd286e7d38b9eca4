"""Construction of resonant three-soliton solutions.

Each solution u = 2 (ln f)_xx is built from three wave numbers k = (k1, k2, k3)
and a single free transverse parameter p3; the remaining p1, p2 are resolved
from the selected resonance case so that the pairwise interaction coefficients

    a_ij = [ki^2 kj^2 (ki-kj)^2 - (kj pi - ki pj)^2]
         / [ki^2 kj^2 (ki+kj)^2 - (kj pi - ki pj)^2]

reach the case's limits (0 for weak, infinity for strong resonance) exactly on
the constraint manifold.  The surviving finite coefficient a12 has a closed
form per case, identical for both constraint branches.  The two branches map
onto each other by the mirror (p3, y) -> (-p3, -y).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateParameterError,
    DomainError,
    InadmissibleParameterError,
    IndeterminateResonanceError,
)
from .tau import ExpSumTau, ExpTerm

Triple = tuple[float, float, float]


class Case(str, Enum):
    GENERIC = "generic"
    C2_1 = "c2_1"
    C2_2 = "c2_2"
    C2_3 = "c2_3"
    C2_4 = "c2_4"
    W2 = "w2"
    M2 = "m2"
    C3_1 = "c3_1"
    C3_2 = "c3_2"


class Branch(str, Enum):
    FIRST = "first"
    SECOND = "second"


class ResonanceKind(str, Enum):
    ELASTIC = "elastic"
    STRONG = "strong"
    WEAK = "weak"
    MIXED = "mixed"


class _Infinite:
    """Distinguished return value of phase_shift_param for a_ij -> infinity."""

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


@dataclass(frozen=True)
class CaseSpec:
    case: Case
    branch: Branch = Branch.FIRST


@dataclass(frozen=True)
class SolitonParams:
    k: Triple
    p: Triple
    xi0: Triple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        for kj in self.k:
            if kj == 0 or not math.isfinite(kj):
                raise DegenerateParameterError(f"k must be finite nonzero, got {self.k}")
        for v in self.p + self.xi0:
            if not math.isfinite(v):
                raise DomainError("non-finite parameter")

    @property
    def omegas(self) -> Triple:
        return tuple(omega(kj, pj) for kj, pj in zip(self.k, self.p))


@dataclass(frozen=True)
class ResonanceClass:
    kinds: dict[tuple[int, int], ResonanceKind]
    a12: float | None


@dataclass(frozen=True)
class ResonantSolution:
    params: SolitonParams
    spec: CaseSpec
    tau: ExpSumTau
    resonance: ResonanceClass
    # per tau term: exponent vector over (xi1, xi2, xi3) and its coefficient
    template: tuple[tuple[tuple[int, int, int], float], ...]
    arms: object | None = None  # AsymptoticCatalog, attached lazily by geometry

    @property
    def a12(self) -> float | None:
        return self.resonance.a12

    @property
    def log_a12(self) -> float:
        return math.log(self.resonance.a12) if self.resonance.a12 else 0.0

    def exponent_of(self, eps) -> tuple[float, float, float, float]:
        """(K, P, W, xi0-part) of the template direction eps."""
        k, p, w, x0 = self.params.k, self.params.p, self.params.omegas, self.params.xi0
        return (sum(e * k[j] for j, e in enumerate(eps)),
                sum(e * p[j] for j, e in enumerate(eps)),
                sum(e * w[j] for j, e in enumerate(eps)),
                sum(e * x0[j] for j, e in enumerate(eps)))


def omega(k: float, p: float) -> float:
    """Temporal frequency -(k^4 + 3 p^2)/k of a single line soliton."""
    if k == 0:
        raise DegenerateParameterError("omega undefined for k = 0")
    return -(k**4 + 3.0 * p * p) / k


def phase_shift_param(ki, pi, kj, pj):
    """Pairwise interaction coefficient a_ij (0, positive real, or INFINITE)."""
    if ki == 0 or kj == 0:
        raise DegenerateParameterError("phase shift undefined for zero wave number")
    cross = kj * pi - ki * pj
    base = ki * ki * kj * kj
    num_lead, num_sub = base * (ki - kj) ** 2, cross * cross
    den_lead, den_sub = base * (ki + kj) ** 2, cross * cross
    num = num_lead - num_sub
    den = den_lead - den_sub
    tol = 1e-11
    num_zero = abs(num) <= tol * max(num_lead, num_sub, 1e-300)
    den_zero = abs(den) <= tol * max(den_lead, den_sub, 1e-300)
    if num_zero and den_zero:
        raise IndeterminateResonanceError(
            f"numerator and denominator both vanish for ({ki}, {pi}), ({kj}, {pj})")
    if den_zero:
        return INFINITE
    if num_zero:
        return 0.0
    a = num / den
    if a < 0:
        raise InadmissibleParameterError(
            f"negative interaction coefficient a = {a} for ({ki}, {pi}), ({kj}, {pj})")
    return a


# (p1, p2) per case family and branch; every second branch is the mirror
# (p3 -> -p3, y -> -y) of the first.
def _strong(k, p3, branch):
    k1, k2, k3 = k
    if branch is Branch.FIRST:
        return (k1 * (k1 * k3 + k3**2 + p3) / k3, -k2 * (k2 * k3 + k3**2 - p3) / k3)
    return (-k1 * (k1 * k3 + k3**2 - p3) / k3, k2 * (k2 * k3 + k3**2 + p3) / k3)


def _weak(k, p3, branch):
    k1, k2, k3 = k
    if branch is Branch.FIRST:
        return (-k1 * (k1 * k3 - k3**2 - p3) / k3, k2 * (k2 * k3 - k3**2 + p3) / k3)
    return (k1 * (k1 * k3 - k3**2 + p3) / k3, -k2 * (k2 * k3 - k3**2 - p3) / k3)


def _mixed(k, p3, branch):
    k1, k2, k3 = k
    if branch is Branch.FIRST:
        return (k1 * (k1 * k3 + k3**2 + p3) / k3, k2 * (k2 * k3 - k3**2 + p3) / k3)
    return (-k1 * (k1 * k3 + k3**2 - p3) / k3, -k2 * (k2 * k3 - k3**2 - p3) / k3)


def _all_weak(k, p3, branch):
    k1, k2, k3 = k
    if branch is Branch.FIRST:
        return (-k1 * (k1 * k3 - k3**2 - p3) / k3, -k2 * (k2 * k3 - k3**2 - p3) / k3)
    return (k1 * (k1 * k3 - k3**2 + p3) / k3, k2 * (k2 * k3 - k3**2 + p3) / k3)


def _mixed3(k, p3, branch):
    k1, k2, k3 = k
    if branch is Branch.FIRST:
        return (-k1 * (k1 * k3 + k3**2 - p3) / k3, -k2 * (k2 * k3 + k3**2 - p3) / k3)
    return (k1 * (k1 * k3 + k3**2 + p3) / k3, k2 * (k2 * k3 + k3**2 + p3) / k3)


_CONSTRAINTS = {
    Case.C2_1: _strong, Case.C2_2: _strong, Case.C2_3: _strong, Case.C2_4: _strong,
    Case.W2: _weak, Case.M2: _mixed, Case.C3_1: _all_weak, Case.C3_2: _mixed3,
}


def a12_closed_form(case: Case, k: Triple) -> float | None:
    """Surviving interaction coefficient; None for the fully resonant cases."""
    k1, k2, k3 = k
    if case in (Case.C2_1, Case.C2_2, Case.C2_3, Case.C2_4):
        den = k3 * (k1 + k2 + k3)
        if den == 0:
            raise DegenerateParameterError("a12 denominator k3 (k1 + k2 + k3) vanishes")
        return (k1 + k3) * (k2 + k3) / den
    if case is Case.W2:
        den = k3 * (k1 + k2 - k3)
        if den == 0:
            raise DegenerateParameterError("a12 denominator k3 (k1 + k2 - k3) vanishes")
        return -(k1 - k3) * (k2 - k3) / den
    if case is Case.M2:
        den = (k1 + k3) * (k2 - k3)
        if den == 0:
            raise DegenerateParameterError("a12 denominator (k1 + k3)(k2 - k3) vanishes")
        return -k3 * (k1 - k2 + k3) / den
    return None


# tau templates: term exponent vectors over (xi1, xi2, xi3); starred terms
# carry the coefficient a12
_A12 = "a12"
TEMPLATES: dict[Case, tuple[tuple[tuple[int, int, int], object], ...]] = {
    Case.C2_1: (((0, 0, 0), 1), ((1, 0, 0), 1), ((0, 1, 0), 1),
                ((1, 1, 0), _A12), ((1, 1, 1), _A12)),
    Case.C2_2: (((0, 0, 0), 1), ((0, 1, 0), 1), ((0, 1, 1), 1), ((1, 1, 1), _A12)),
    Case.C2_3: (((0, 0, 0), 1), ((1, 0, 0), 1), ((1, 0, 1), 1), ((1, 1, 1), _A12)),
    Case.C2_4: (((0, 0, 0), 1), ((0, 0, 1), 1), ((1, 0, 1), 1),
                ((0, 1, 1), 1), ((1, 1, 1), _A12)),
    Case.W2: (((0, 0, 0), 1), ((1, 0, 0), 1), ((0, 1, 0), 1),
              ((0, 0, 1), 1), ((1, 1, 0), _A12)),
    Case.M2: (((0, 0, 0), 1), ((1, 0, 0), 1), ((0, 1, 0), 1),
              ((1, 1, 0), _A12), ((1, 0, 1), 1)),
    Case.C3_1: (((0, 0, 0), 1), ((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)),
    Case.C3_2: (((0, 0, 0), 1), ((0, 0, 1), 1), ((1, 0, 1), 1), ((0, 1, 1), 1)),
}

_KINDS = {
    Case.C2_1: {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.STRONG,
                (2, 3): ResonanceKind.STRONG},
    Case.W2: {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.WEAK,
              (2, 3): ResonanceKind.WEAK},
    Case.M2: {(1, 2): ResonanceKind.ELASTIC, (1, 3): ResonanceKind.STRONG,
              (2, 3): ResonanceKind.WEAK},
    Case.C3_1: {(1, 2): ResonanceKind.WEAK, (1, 3): ResonanceKind.WEAK,
                (2, 3): ResonanceKind.WEAK},
    Case.C3_2: {(1, 2): ResonanceKind.WEAK, (1, 3): ResonanceKind.STRONG,
                (2, 3): ResonanceKind.STRONG},
}
for _c in (Case.C2_2, Case.C2_3, Case.C2_4):
    _KINDS[_c] = _KINDS[Case.C2_1]


def resolve_constraints(k, p3: float, spec: CaseSpec, xi0=(0.0, 0.0, 0.0)) -> SolitonParams:
    """Fill p1, p2 from the case's constraint pair and validate a12."""
    if spec.case is Case.GENERIC:
        raise DegenerateParameterError(
            "generic solutions take explicit p1, p2 via make_generic")
    k = tuple(float(v) for v in k)
    if len(k) != 3:
        raise DomainError("k must have three components")
    if k[2] == 0:
        raise DegenerateParameterError("constraints require k3 != 0")
    p3 = float(p3)
    p1, p2 = _CONSTRAINTS[spec.case](k, p3, spec.branch)
    a12 = a12_closed_form(spec.case, k)
    if a12 is not None:
        if not math.isfinite(a12):
            raise DegenerateParameterError(f"a12 = {a12} is not finite")
        if a12 <= 0:
            raise InadmissibleParameterError(
                f"case {spec.case.value} requires 0 < a12 < inf, got a12 = {a12}")
    return SolitonParams(k=k, p=(p1, p2, p3), xi0=tuple(float(v) for v in xi0))


def classify_resonance(params: SolitonParams, spec: CaseSpec) -> ResonanceClass:
    """Per-pair resonance kinds plus the surviving a12 (None when absent)."""
    if spec.case is Case.GENERIC:
        kinds = {}
        for (i, j) in ((1, 2), (1, 3), (2, 3)):
            a = phase_shift_param(params.k[i - 1], params.p[i - 1],
                                  params.k[j - 1], params.p[j - 1])
            if a is INFINITE:
                kinds[(i, j)] = ResonanceKind.STRONG
            elif a == 0:
                kinds[(i, j)] = ResonanceKind.WEAK
            else:
                kinds[(i, j)] = ResonanceKind.ELASTIC
        a12 = phase_shift_param(params.k[0], params.p[0], params.k[1], params.p[1])
        return ResonanceClass(kinds=dict(kinds),
                              a12=a12 if isinstance(a12, float) and a12 > 0 else None)
    return ResonanceClass(kinds=dict(_KINDS[spec.case]),
                          a12=a12_closed_form(spec.case, params.k))


def _make_tau(params: SolitonParams, template) -> ExpSumTau:
    terms = []
    for eps, coeff in template:
        K = sum(e * params.k[j] for j, e in enumerate(eps))
        P = sum(e * params.p[j] for j, e in enumerate(eps))
        W = sum(e * omega(params.k[j], params.p[j]) for j, e in enumerate(eps))
        s = sum(e * params.xi0[j] for j, e in enumerate(eps))
        terms.append(ExpTerm(coeff=float(coeff), kx=K, py=P, wt=W, phase=s))
    return ExpSumTau(tuple(terms))


def build_solution(params: SolitonParams, spec: CaseSpec) -> ResonantSolution:
    """Instantiate the case's tau template at resolved parameters."""
    if spec.case is Case.GENERIC:
        raise DegenerateParameterError("use make_generic for the generic case")
    resonance = classify_resonance(params, spec)
    a12 = resonance.a12
    template = tuple(
        (eps, a12 if coeff is _A12 else float(coeff))
        for eps, coeff in TEMPLATES[spec.case])
    return ResonantSolution(params=params, spec=spec,
                            tau=_make_tau(params, template),
                            resonance=resonance, template=template)


def build_case(case, k, p3, branch=Branch.FIRST, xi0=(0.0, 0.0, 0.0)) -> ResonantSolution:
    """Resolve constraints and build in one step."""
    spec = CaseSpec(Case(case), Branch(branch))
    return build_solution(resolve_constraints(k, p3, spec, xi0), spec)


def make_generic(k, p, xi0=(0.0, 0.0, 0.0), xi_shift=(0.0, 0.0, 0.0)) -> ResonantSolution:
    """Eight-term solution with explicit (p1, p2, p3); all a_ij must be finite.

    xi_shift adds constant offsets to the phases xi_j (used by the resonant
    limit studies, which recentre diverging coefficients before the limit).
    """
    params = SolitonParams(k=tuple(float(v) for v in k),
                           p=tuple(float(v) for v in p),
                           xi0=tuple(float(a) + float(b) for a, b in zip(xi0, xi_shift)))
    spec = CaseSpec(Case.GENERIC)
    a = {}
    for (i, j) in ((1, 2), (1, 3), (2, 3)):
        aij = phase_shift_param(params.k[i - 1], params.p[i - 1],
                                params.k[j - 1], params.p[j - 1])
        if aij is INFINITE:
            raise DegenerateParameterError(
                f"a{i}{j} is infinite; the generic template requires finite coefficients")
        a[(i, j)] = aij
    template = (
        ((0, 0, 0), 1.0), ((1, 0, 0), 1.0), ((0, 1, 0), 1.0), ((0, 0, 1), 1.0),
        ((1, 1, 0), a[(1, 2)]), ((1, 0, 1), a[(1, 3)]), ((0, 1, 1), a[(2, 3)]),
        ((1, 1, 1), a[(1, 2)] * a[(1, 3)] * a[(2, 3)]),
    )
    resonance = classify_resonance(params, spec)
    return ResonantSolution(params=params, spec=spec,
                            tau=_make_tau(params, template),
                            resonance=resonance, template=template)
