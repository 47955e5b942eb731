import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import random_sl2, sl2_matrices
from kleinian_rp import (
    MIN_DISTANCE_TABLE,
    Geodesic,
    MoebiusMap,
    RelationKind,
    axes_relation,
    axis_of,
    lines_disjoint_after_pivot,
    min_distance,
    pivot_bound,
    min_distance_discrepancies,
    triangle_ray_disjoint,
)
from kleinian_rp.errors import DegenerateGeodesic, HypothesisViolated, NoAxis, OutOfRange
from kleinian_rp.geometry import (
    DisjointLinesQuery,
    act_on_point,
    foot_on,
    h2_lines_relation,
    min_distance_formula,
    point_distance,
    transversal_lines,
)

# -- axes ---------------------------------------------------------------------------


def test_axis_of_diagonal():
    ends = set(axis_of(MoebiusMap.diagonal(2)).endpoints)
    assert ends == {0, math.inf}


def test_parabolic_has_no_axis():
    with pytest.raises(NoAxis):
        axis_of(MoebiusMap(1, 1, 0, 1))


def test_elliptic_fixed_points(rng):
    for _ in range(20):
        M = MoebiusMap(2 * math.cos(rng.uniform(0.1, 3)), -1, 1, 0).conjugate_by(random_sl2(rng))
        for z in axis_of(M).endpoints:
            w = M.apply(z)
            assert abs(w - z) < 1e-9 * max(1, abs(z))


def test_orthogonal_axes():
    r = axes_relation(Geodesic.from_points(0, math.inf), Geodesic.from_points(-1, 1))
    assert r.kind is RelationKind.INTERSECTING and r.angle == pytest.approx(math.pi / 2)


def _semicircle_distance(a: float, b: float, samples: int = 200_001) -> float:
    """Brute-force distance in the upper half-plane from the imaginary axis to the
    geodesic with real endpoints a < b, both positive."""
    c, rad = (a + b) / 2, (b - a) / 2
    t = np.linspace(1e-6, math.pi - 1e-6, samples)
    x, y = c + rad * np.cos(t), rad * np.sin(t)
    return float(np.min(np.arcsinh(x / y)))


@pytest.mark.parametrize("r", [0.3, 1.0, 2.0])
def test_disjoint_axes_distance(r):
    rel = axes_relation(Geodesic.from_points(0, math.inf), Geodesic.from_points(1, math.exp(2 * r)))
    assert rel.kind is RelationKind.DISJOINT
    assert rel.distance == pytest.approx(_semicircle_distance(1, math.exp(2 * r)), abs=1e-8)
    assert rel.distance == pytest.approx(math.asinh(1 / math.sinh(r)), abs=1e-12)


def test_parallel_and_coincident():
    A = Geodesic.from_points(0, math.inf)
    assert axes_relation(A, Geodesic.from_points(0, 1)).kind is RelationKind.PARALLEL
    assert axes_relation(A, Geodesic.from_points(math.inf, 0)).kind is RelationKind.COINCIDENT
    with pytest.raises(DegenerateGeodesic):
        axes_relation(A, Geodesic.from_points(1, 1))


def test_relation_after_scaling():
    A = Geodesic.from_points(0, math.inf)
    B = Geodesic.from_points(-1, 1).image(MoebiusMap.diagonal(cmath.exp(0.5)))  # scale by e
    rel = axes_relation(A, B)
    assert rel.kind is RelationKind.INTERSECTING and rel.angle == pytest.approx(math.pi / 2)
    B = Geodesic.from_points(2, 3)
    assert axes_relation(A, B).kind is RelationKind.DISJOINT


@given(sl2_matrices(), st.floats(-5, 5), st.floats(-5, 5), st.floats(0.1, 3), st.floats(0, 6.28))
def test_relation_conjugation_invariant(W, x, y, r, phi):
    A = Geodesic.from_points(0, math.inf)
    B = Geodesic.from_points(complex(x, y), complex(x, y) + r * cmath.exp(1j * phi))
    a = axes_relation(A, B)
    b = axes_relation(A.image(W), B.image(W))
    assert a.kind == b.kind
    assert abs(a.complex_distance - b.complex_distance) < 1e-8


def test_foot_and_point_action():
    A, B = Geodesic.from_points(0, math.inf), Geodesic.from_points(-1, 1)
    z, t = foot_on(A, B)
    assert abs(z) < 1e-12 and t == pytest.approx(1)
    M = MoebiusMap.diagonal(cmath.exp(0.25))
    assert point_distance(act_on_point(M, (0j, 1.0)), (0j, 1.0)) == pytest.approx(0.5)


# -- minimal distances --------------------------------------------------------------


@pytest.mark.parametrize("p,q,value", [(7, 2, 1.152), (7, 7, 1.656), (5, 3, 1.376)])
def test_min_distance_examples(p, q, value):
    assert min_distance(p, q) == pytest.approx(value, abs=5e-4)


def test_min_distance_73():
    exact = math.cos(math.pi / 7) / (2 * math.sin(math.pi / 7) * math.sin(math.pi / 3))
    assert min_distance(7, 3) == pytest.approx(exact, abs=1e-15)
    assert exact == pytest.approx(1.19888, abs=1e-5)
    # printed as 1.198: truncated rather than rounded
    assert min_distance_discrepancies() == [(3, 7, 1.198, exact), (7, 3, 1.198, exact)]


def test_min_distance_symmetric_and_at_least_one():
    for p in range(2, 30):
        for q in range(2, 30):
            assert min_distance(p, q) == min_distance(q, p)
            assert min_distance(p, q) >= 1
    assert all(MIN_DISTANCE_TABLE[(p, q)] == MIN_DISTANCE_TABLE[(q, p)] for p, q in MIN_DISTANCE_TABLE)


def test_min_distance_range():
    with pytest.raises(OutOfRange):
        min_distance(1, 3)
    with pytest.raises(OutOfRange):
        min_distance_formula(5, 3)


# -- pivoting lemmas ------------------------------------------------------------------


def test_pivot_identity_k1():
    psi, chi = 0.4, 0.9
    q = DisjointLinesQuery(pivot_bound(1, psi, chi) * 1.01, psi, chi, 1.0)
    assert lines_disjoint_after_pivot(q)


def test_pivot_example():
    psi, chi = 0.3, 0.6
    bound = (1 - math.cos(psi) * math.cos(chi)) / (math.sin(psi) * math.sin(chi))
    assert lines_disjoint_after_pivot(DisjointLinesQuery(1.2 * bound, psi, chi, 0.5))
    assert pivot_bound(0.5, psi, chi) < bound


def test_pivot_hypothesis():
    with pytest.raises(HypothesisViolated):
        lines_disjoint_after_pivot(DisjointLinesQuery(1.0, 0.3, 0.6, 0.5))
    with pytest.raises(OutOfRange):
        DisjointLinesQuery(2.0, 0.6, 0.3, 0.5)
    with pytest.raises(OutOfRange):
        DisjointLinesQuery(2.0, 0.3, 0.6, 1.5)


@given(st.floats(0.01, 1.5), st.floats(0.01, 1.5), st.floats(1e-6, 1.0), st.floats(0.05, 1.0))
def test_pivot_agrees_with_explicit_lines(a, b, stretch, k):
    psi, chi = min(a, b), max(a, b)
    assume(chi - psi > 1e-3)
    cosh_pq = pivot_bound(1, psi, chi) * (1 + stretch)
    kind, _ = h2_lines_relation(*transversal_lines(cosh_pq, psi, chi))
    assert kind == "disjoint"
    kind, _ = h2_lines_relation(*transversal_lines(cosh_pq, k * psi, k * chi))
    assert kind == "disjoint"
    assert lines_disjoint_after_pivot(DisjointLinesQuery(cosh_pq, psi, chi, k))


def test_parallel_at_bound():
    psi, chi = 0.5, 1.1
    kind, _ = h2_lines_relation(*transversal_lines(pivot_bound(1, psi, chi), psi, chi), eps=1e-9)
    assert kind == "parallel"


def test_triangle_angles_validated():
    with pytest.raises(OutOfRange):
        triangle_ray_disjoint(1.0, 1.0, 1.2, 0.5)


@pytest.mark.parametrize("c", [0.3, 0.7, 1.0])
def test_pivot_dominated_triangles(c):
    rng = np.random.default_rng(int(c * 10))
    starts = 0
    while starts < 5:
        phi0, psi0, theta0 = rng.uniform(0.05, 1.2, 3)
        if phi0 + psi0 + theta0 >= math.pi or not triangle_ray_disjoint(phi0, psi0, theta0, c):
            continue
        starts += 1
        for _ in range(100):
            phi, psi, theta = rng.uniform(0.01, 1, 3) * (phi0, psi0, theta0)
            assert triangle_ray_disjoint(phi, psi, theta, c)
