"""Reference parameter sets, one per shipped scenario.

The c2_2 set differs from the other strong sets by a sign pattern that keeps
a12 positive (the mirrored wave numbers are admissible; see scenarios/).
"""

from .catalog import Branch, Case, build_case

FIGURES: dict[str, dict] = {
    "c2_1": {"case": "c2_1", "k": (-1.0, -2.0, -4.0 / 3.0), "p3": 1.0},
    # same case, parameter set with the x-axis asymptotic listing
    "c2_1_alt": {"case": "c2_1", "k": (-1.0, 1.5, 2.0), "p3": 1.0},
    "c2_2": {"case": "c2_2", "k": (-2.0 / 3.0, -1.0, -4.0 / 3.0), "p3": 2.0 / 3.0},
    "c2_3": {"case": "c2_3", "k": (-1.0, -2.0 / 3.0, -4.0 / 3.0), "p3": 2.0 / 3.0},
    "c2_4": {"case": "c2_4", "k": (2.0, 1.0, 2.0 / 3.0), "p3": 1.5},
    "w2": {"case": "w2", "k": (1.0, -1.0, -2.0), "p3": -0.5},
    "m2": {"case": "m2", "k": (2.0, -1.0, -1.5), "p3": 1.0},
    "c3_1": {"case": "c3_1", "k": (2.0, 4.0 / 3.0, 1.0), "p3": 0.0},
    "c3_2": {"case": "c3_2", "k": (1.0, 4.0 / 3.0, 2.0 / 3.0), "p3": 1.5},
}


def build_figure(name: str, branch=Branch.FIRST):
    """Build the named reference solution."""
    fig = FIGURES[name]
    return build_case(Case(fig["case"]), fig["k"], fig["p3"], branch=branch)
