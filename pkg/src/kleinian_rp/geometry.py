"""Geodesics of H^3 attached to Moebius maps, plus the plane geometry behind pivoting.

Points of the sphere at infinity are handled in homogeneous coordinates
(z : w), so infinity is (1 : 0) and no special cases are needed. Points of
H^3 live in the upper half-space as pairs (z, t) with t > 0. Plane
computations for the two pivot lemmas use the hyperboloid model of H^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DegenerateGeodesic, HypothesisViolated, NoAxis, OutOfRange
from .moebius import Kind, MoebiusMap, classify_element, fixed_vectors

Vec = tuple[complex, complex]

HALF_PI = 0.5 * math.pi


def _hdet(u: Vec, v: Vec) -> complex:
    return u[0] * v[1] - u[1] * v[0]


def _unit(v: Vec) -> Vec:
    n = math.hypot(abs(v[0]), abs(v[1]))
    return (v[0] / n, v[1] / n)


def to_homogeneous(z) -> Vec:
    if z == math.inf:
        return (1 + 0j, 0j)
    return _unit((complex(z), 1 + 0j))


def from_homogeneous(v: Vec, tiny: float = 1e-15):
    if abs(v[1]) <= tiny * abs(v[0]):
        return math.inf
    return v[0] / v[1]


@dataclass(frozen=True)
class Geodesic:
    """An unoriented geodesic of H^3, given by its two ideal endpoints."""

    u: Vec
    v: Vec

    @classmethod
    def from_points(cls, z1, z2) -> "Geodesic":
        return cls(to_homogeneous(z1), to_homogeneous(z2))

    @property
    def endpoints(self):
        return from_homogeneous(self.u), from_homogeneous(self.v)

    def image(self, M: MoebiusMap) -> "Geodesic":
        def act(x):
            return _unit((M.a * x[0] + M.b * x[1], M.c * x[0] + M.d * x[1]))
        return Geodesic(act(self.u), act(self.v))


def axis_of(M: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> Geodesic:
    """Axis of a non-parabolic, non-identity element: the geodesic joining its fixed points."""
    kind = classify_element(M, tol).kind
    if kind in (Kind.PARABOLIC, Kind.IDENTITY):
        raise NoAxis(f"{kind.value} elements have no axis")
    u, v = fixed_vectors(M)
    return Geodesic(u, v)


class RelationKind(str, Enum):
    COINCIDENT = "coincident"
    INTERSECTING = "intersecting"
    PARALLEL = "parallel"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class AxisRelation:
    """Relative position of two geodesics.

    ``complex_distance`` is delta + i*theta with delta >= 0 the length of the
    common perpendicular and theta in [0, pi/2] the unoriented twist angle.
    """

    kind: RelationKind
    angle: float | None = None
    distance: float | None = None
    complex_distance: complex | None = None

    @property
    def meets(self) -> bool:
        return self.kind in (RelationKind.INTERSECTING, RelationKind.COINCIDENT)


def cosh_complex_distance(A: Geodesic, B: Geodesic) -> complex:
    """cosh of the complex distance between two geodesics, from a cross-ratio.

    With cr = [a1, a2; b1, b2] = (a1-b1)(a2-b2) / ((a1-b2)(a2-b1)) one has
    cr = tanh^2(sigma/2), hence cosh(sigma) = (1 + cr) / (1 - cr).
    """
    num = _hdet(A.u, B.u) * _hdet(A.v, B.v)
    den = _hdet(A.u, B.v) * _hdet(A.v, B.u)
    return (den + num) / (den - num)


def complex_distance(A: Geodesic, B: Geodesic) -> complex:
    """delta + i theta, delta >= 0, theta in [0, pi/2]."""
    sigma = cmath.acosh(cosh_complex_distance(A, B))
    theta = abs(sigma.imag) % math.pi
    if theta > HALF_PI:
        theta = math.pi - theta
    return complex(abs(sigma.real), theta)


def axes_relation(A: Geodesic, B: Geodesic, tol: Tolerances = DEFAULT_TOLERANCES,
                  eps: float | None = None) -> AxisRelation:
    """Classify two geodesics; ``eps`` (default ``tol.eps``) is the intersection threshold."""
    eps = tol.eps if eps is None else eps
    for g in (A, B):
        if abs(_hdet(g.u, g.v)) <= tol.eps:
            raise DegenerateGeodesic("geodesic with coincident endpoints")
    shared = sum(abs(_hdet(x, y)) <= tol.eps for x in (A.u, A.v) for y in (B.u, B.v))
    if shared >= 2:
        return AxisRelation(RelationKind.COINCIDENT, complex_distance=0j)
    if shared == 1:
        return AxisRelation(RelationKind.PARALLEL, complex_distance=0j)
    sigma = complex_distance(A, B)
    if sigma.real <= eps:
        return AxisRelation(RelationKind.INTERSECTING, angle=sigma.imag, complex_distance=sigma)
    return AxisRelation(RelationKind.DISJOINT, distance=sigma.real, complex_distance=sigma)


# -- points of H^3 (upper half-space) ------------------------------------------------


def act_on_point(M: MoebiusMap, point: tuple[complex, float]) -> tuple[complex, float]:
    """Poincare extension of M acting on (z, t) in the upper half-space."""
    z, t = point
    a, b, c, d = M.entries
    w = c * z + d
    den = abs(w) ** 2 + abs(c) ** 2 * t * t
    return ((a * z + b) * w.conjugate() + a * c.conjugate() * t * t) / den, t / den


def point_distance(p1: tuple[complex, float], p2: tuple[complex, float]) -> float:
    (z1, t1), (z2, t2) = p1, p2
    return math.acosh(1 + (abs(z1 - z2) ** 2 + (t1 - t2) ** 2) / (2 * t1 * t2))


def foot_on(A: Geodesic, B: Geodesic) -> tuple[complex, float]:
    """Point of A closest to B; the intersection point when the two meet."""
    # P sends infinity to A.u and 0 to A.v
    P = MoebiusMap.from_entries(A.u[0], A.v[0], A.u[1], A.v[1])
    N = P.inverse()
    w1 = from_homogeneous(Geodesic(B.u, B.v).image(N).u)
    w2 = from_homogeneous(Geodesic(B.u, B.v).image(N).v)
    if w1 == math.inf or w2 == math.inf or w1 == 0 or w2 == 0:
        raise DegenerateGeodesic("geodesics share an endpoint")
    height = math.sqrt(abs(w1) * abs(w2))
    return act_on_point(P, (0j, height))


# -- minimal distances between elliptic axes -----------------------------------------

# cosh rho_min(p, q) for 2 <= p, q <= 7, as printed to three decimals
_MIN_DISTANCE_ROWS = {
    2: (1.000, 1.019, 1.088, 1.106, 1.225, 1.152),
    3: (1.019, 1.079, 1.155, 1.376, 1.155, 1.198),
    4: (1.088, 1.155, 1.366, 1.203, 1.414, 1.630),
    5: (1.106, 1.376, 1.203, 1.447, 1.701, 1.961),
    6: (1.225, 1.155, 1.414, 1.701, 2.000, 2.305),
    7: (1.152, 1.198, 1.630, 1.961, 2.305, 1.656),
}
MIN_DISTANCE_TABLE: dict[tuple[int, int], float] = {
    (p, q): row[q - 2] for p, row in _MIN_DISTANCE_ROWS.items() for q in range(2, 8)
}


def min_distance_formula(p: int, q: int) -> float:
    """Closed form for cosh rho_min when max(p, q) >= 7."""
    p, q = max(p, q), min(p, q)
    if p < 7:
        raise OutOfRange("the closed form needs max(p, q) >= 7")
    denom = 2 * math.sin(math.pi / p) * math.sin(math.pi / q)
    if q == p:
        return math.cos(2 * math.pi / p) / denom
    if q == 3:
        return math.cos(math.pi / p) / denom
    return 1 / denom


def min_distance(p: int, q: int) -> float:
    """cosh of the minimal distance between axes of elliptics of orders p and q."""
    if p < 2 or q < 2:
        raise OutOfRange("orders must be at least 2")
    if max(p, q) >= 7:
        return min_distance_formula(p, q)
    return MIN_DISTANCE_TABLE[(p, q)]


def min_distance_discrepancies(atol: float = 5e-4) -> list[tuple[int, int, float, float]]:
    """Entries where both the printed table and the closed form apply and differ by more than atol."""
    out = []
    for (p, q), printed in sorted(MIN_DISTANCE_TABLE.items()):
        if max(p, q) >= 7:
            exact = min_distance_formula(p, q)
            if abs(exact - printed) > atol:
                out.append((p, q, printed, exact))
    return out


# -- hyperbolic plane (hyperboloid model) -------------------------------------------

_J = np.diag([1.0, 1.0, -1.0])
ORIGIN = np.array([0.0, 0.0, 1.0])


def minkowski(x, y) -> float:
    return float(x @ _J @ y)


def h2_point_along(start: np.ndarray, direction: np.ndarray, length: float) -> np.ndarray:
    """Point at `length` from `start` along the unit tangent `direction`."""
    return math.cosh(length) * start + math.sinh(length) * direction


def h2_line(point: np.ndarray, tangent: np.ndarray) -> np.ndarray:
    """Unit spacelike normal of the line through `point` with `tangent`."""
    n = _J @ np.cross(point, tangent)
    return n / math.sqrt(minkowski(n, n))


def h2_lines_relation(n1: np.ndarray, n2: np.ndarray, eps: float = 1e-12) -> tuple[str, float]:
    """('intersecting', angle) / ('parallel', 0) / ('disjoint', distance) for two lines."""
    x = abs(minkowski(n1, n2))
    if abs(x - 1) <= eps:
        return "parallel", 0.0
    if x < 1:
        return "intersecting", math.acos(x)
    return "disjoint", math.acosh(x)


@dataclass(frozen=True)
class DisjointLinesQuery:
    """Two lines crossing a transversal PQ at corresponding angles psi < chi, and a scale k."""

    cosh_PQ: float
    psi: float
    chi: float
    k: float

    def __post_init__(self):
        if not self.cosh_PQ >= 1:
            raise OutOfRange("cosh PQ must be at least 1")
        if not 0 < self.psi < self.chi < HALF_PI:
            raise OutOfRange("need 0 < psi < chi < pi/2")
        if not 0 < self.k <= 1:
            raise OutOfRange("need 0 < k <= 1")


def pivot_bound(k: float, psi: float, chi: float) -> float:
    """(1 - cos k psi cos k chi) / (sin k psi sin k chi): cosh PQ at which the lines become parallel."""
    return (1 - math.cos(k * psi) * math.cos(k * chi)) / (math.sin(k * psi) * math.sin(k * chi))


def lines_disjoint_after_pivot(q: DisjointLinesQuery) -> bool:
    """Scaling both angles by k in (0, 1] keeps disjoint lines disjoint.

    Checks the hypothesis cosh PQ > bound(1), that bound(k) <= bound(1), and
    concludes cosh PQ > bound(k).
    """
    original = pivot_bound(1.0, q.psi, q.chi)
    if not q.cosh_PQ > original:
        raise HypothesisViolated("the lines are not disjoint before pivoting")
    pivoted = pivot_bound(q.k, q.psi, q.chi)
    if pivoted > original * (1 + 1e-15):
        raise HypothesisViolated("pivot bound is not monotone here")
    return q.cosh_PQ > pivoted


def transversal_lines(cosh_PQ: float, psi: float, chi: float) -> tuple[np.ndarray, np.ndarray]:
    """Normals of the lines through P and Q meeting PQ at corresponding angles psi and chi.

    Both angles are measured from the direction P -> Q on the same side of PQ.
    """
    D = math.acosh(cosh_PQ)
    e_x = np.array([1.0, 0.0, 0.0])
    e_y = np.array([0.0, 1.0, 0.0])
    Q = h2_point_along(ORIGIN, e_x, D)
    e_x_at_Q = math.sinh(D) * ORIGIN + math.cosh(D) * e_x
    l1 = h2_line(ORIGIN, math.cos(psi) * e_x + math.sin(psi) * e_y)
    l2 = h2_line(Q, math.cos(chi) * e_x_at_Q + math.sin(chi) * e_y)
    return l1, l2


def triangle_ray_disjoint(phi: float, psi: float, theta: float, c: float) -> bool:
    """Pivot configuration for a triangle NLM with angles phi, psi, theta at N, L, M.

    Returns whether the half-line d from L, making angle c*psi with LM on the
    side away from the triangle, misses the line l through N and M.
    """
    if not (phi > 0 and psi > 0 and theta > 0 and phi + psi + theta < math.pi):
        raise OutOfRange("angles must form a hyperbolic triangle")
    cosh_LM = (math.cos(phi) + math.cos(psi) * math.cos(theta)) / (math.sin(psi) * math.sin(theta))
    cosh_LN = (math.cos(theta) + math.cos(phi) * math.cos(psi)) / (math.sin(phi) * math.sin(psi))
    e_x = np.array([1.0, 0.0, 0.0])
    to_N = np.array([math.cos(psi), math.sin(psi), 0.0])
    M = h2_point_along(ORIGIN, e_x, math.acosh(cosh_LM))
    N = h2_point_along(ORIGIN, to_N, math.acosh(cosh_LN))
    w = np.cross(N, M)
    u = np.array([math.cos(c * psi), -math.sin(c * psi), 0.0])
    wu = float(w @ u)
    if wu == 0:
        return True
    tanh_s = -float(w @ ORIGIN) / wu
    return not (0 < tanh_s < 1)
