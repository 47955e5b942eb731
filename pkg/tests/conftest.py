import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from kleinian_rp import MoebiusMap, ParamTriple

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SQ5 = math.sqrt(5)
ROW34 = ParamTriple(-3.0, SQ5, (SQ5 + 1) / 2)


def random_sl2(rng: np.random.Generator, max_norm: float = 10.0) -> MoebiusMap:
    """Random determinant-one matrix of moderate norm."""
    while True:
        a, b, c = rng.normal(size=3) + 1j * rng.normal(size=3)
        if abs(a) > 0.3:
            M = MoebiusMap(a, b, c, (1 + b * c) / a)
            if M.norm() < max_norm:
                return M


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


odd_n = st.sampled_from([3, 5, 7, 9, 11])


@st.composite
def theorem_a_triples(draw, ns=odd_n, max_beta_prime=20.0):
    """(beta, beta', gamma) with f primitive of odd order n, g hyperbolic, axes meeting obliquely."""
    n = draw(ns)
    beta = -4 * math.sin(math.pi / n) ** 2
    beta_p = draw(st.floats(0.05, max_beta_prime))
    frac = draw(st.floats(0.01, 0.99))
    return ParamTriple(beta, beta_p, frac * (-beta * beta_p / 4))


@st.composite
def sl2_matrices(draw, max_norm: float = 6.0):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_sl2(np.random.default_rng(seed), max_norm)
