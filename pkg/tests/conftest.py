import numpy as np
import pytest

from kpii_stem import FIGURES, build_figure

REFERENCE_NAMES = tuple(FIGURES)


@pytest.fixture(scope="session")
def solutions():
    """One built solution per reference parameter set."""
    return {name: build_figure(name) for name in REFERENCE_NAMES}


def richardson_fd(f, x, h):
    """Fourth-order central difference with Richardson extrapolation."""
    d = lambda hh: (f(x + hh) - f(x - hh)) / (2.0 * hh)
    return (4.0 * d(h / 2.0) - d(h)) / 3.0


def random_points(rng, n, span=20.0, tspan=5.0):
    return np.column_stack([rng.uniform(-span, span, n),
                            rng.uniform(-span, span, n),
                            rng.uniform(-tspan, tspan, n)])
