"""Resonant three-soliton solutions of the KPII equation and the analytic
geometry of their variable-length stem structures."""

__version__ = "0.1.0"

from .catalog import (
    INFINITE,
    Branch,
    Case,
    CaseSpec,
    ResonanceClass,
    ResonanceKind,
    ResonantSolution,
    SolitonParams,
    a12_closed_form,
    build_case,
    build_solution,
    classify_resonance,
    make_generic,
    omega,
    phase_shift_param,
    resolve_constraints,
)
from .figures import FIGURES, build_figure
from .geometry import (
    PARALLEL,
    ArmDescriptor,
    AsymptoticCatalog,
    Region,
    StemReport,
    VelocityRow,
    arm_catalog,
    arm_profile,
    cross_section,
    find_arm,
    intersect_lines,
    midpoint_amplitude,
    parse_arm_label,
    stem_endpoints,
    stem_length_formula,
    trajectory_line,
    velocity_table,
)
from .tau import ExpSumTau, ExpTerm, FieldSample, eval_partials, eval_tau, eval_u, log_eval_tau, u_on_grid
from .verify import (
    ResidualReport,
    RidgeTrace,
    asymptotic_match,
    kp_residual,
    limit_convergence,
    limit_family,
    ridge_trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
