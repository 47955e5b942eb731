"""Auxiliary elements h1..h4 built from a generator pair (f, g).

f is a primitive elliptic of odd order n and g is hyperbolic, with axes
meeting at a non-right angle. Each h_i is a square root in PSL(2,C) of a word
in f and g; of the two roots, the one satisfying a geometric side condition is
kept. The element classes of the h_i encode the dihedral angles of a
fundamental polyhedron, which is what the discreteness test reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import BranchAmbiguity, NotApplicable, PreconditionViolated
from .geometry import Geodesic, RelationKind, axes_relation, axis_of
from .moebius import (
    ElementClass,
    Kind,
    MoebiusMap,
    classify_element,
    elliptic_kth_roots,
    sqrt_in_psl,
)

HALF_PI = 0.5 * math.pi


def check_hypothesis(f: MoebiusMap, g: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Return the order n of f, or raise PreconditionViolated."""
    cf = classify_element(f, tol)
    if not cf.is_primitive_elliptic():
        raise PreconditionViolated("f must be a primitive elliptic element of finite order")
    n = cf.order
    if n < 3 or n % 2 == 0:
        raise PreconditionViolated(f"f has order {n}; an odd order n >= 3 is required")
    if classify_element(g, tol).kind is not Kind.HYPERBOLIC:
        raise PreconditionViolated("g must be hyperbolic")
    rel = axes_relation(axis_of(f, tol), axis_of(g, tol), tol, eps=tol.eps_axis)
    if rel.kind is not RelationKind.INTERSECTING:
        raise PreconditionViolated(f"axes of f and g are {rel.kind.value}, not intersecting")
    if rel.angle >= HALF_PI - tol.eps_axis:
        raise PreconditionViolated("axes of f and g are orthogonal")
    return n


def _select(candidates: Sequence[MoebiusMap], test: Callable[[MoebiusMap], bool], what: str) -> MoebiusMap:
    chosen = [S for S in candidates if test(S)]
    if len(chosen) != 1:
        raise BranchAmbiguity(f"{what}: {len(chosen)} of {len(candidates)} branches pass")
    return chosen[0]


def meets_axis(E: MoebiusMap, axis: Geodesic, tol: Tolerances) -> bool:
    """E is elliptic and its axis meets `axis` (within eps_axis)."""
    E = E.renormalized()
    if classify_element(E, tol).kind is not Kind.ELLIPTIC:
        return False
    return axes_relation(axis_of(E, tol), axis, tol, eps=tol.eps_axis).meets


def axis_gap(E: MoebiusMap, axis: Geodesic, tol: Tolerances) -> float:
    rel = axes_relation(axis_of(E, tol), axis, tol, eps=tol.eps_axis)
    return rel.complex_distance.real


# -- words ----------------------------------------------------------------------------


def h1_word(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """g f g^-1 f."""
    return g @ f @ g.inverse() @ f


def h2_word(f: MoebiusMap, g: MoebiusMap, n: int) -> MoebiusMap:
    """f^((n-1)/2) g^-1 f^-1 g f^(-(n+1)/2) g f^-1 g^-1."""
    fi, gi = f.inverse(), g.inverse()
    return f ** ((n - 1) // 2) @ gi @ fi @ g @ f ** (-(n + 1) // 2) @ g @ fi @ gi


def h3_word(f: MoebiusMap, g: MoebiusMap, h1: MoebiusMap, n: int) -> MoebiusMap:
    """f^((n-1)/2) g^-1 h1^-1 g f^(-(n-3)/2) h1^-1."""
    h1i = h1.inverse()
    return f ** ((n - 1) // 2) @ g.inverse() @ h1i @ g @ f ** (-(n - 3) // 2) @ h1i


def h4_word(f: MoebiusMap, g: MoebiusMap, tilde_h1: MoebiusMap, n: int) -> MoebiusMap:
    """f^((n-3)/2) g^-1 th1 g f^(-(n+1)/2) th1 f^-1."""
    return (f ** ((n - 3) // 2) @ g.inverse() @ tilde_h1 @ g @ f ** (-(n + 1) // 2)
            @ tilde_h1 @ f.inverse())


# -- builders -------------------------------------------------------------------------


def build_h1(f: MoebiusMap, g: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> MoebiusMap:
    """The square root of g f g^-1 f with (h1 f^-1)^2 = 1, i.e. tr(h1 f^-1) = 0."""
    check_hypothesis(f, g, tol)
    fi = f.inverse()

    def involutive(S: MoebiusMap) -> bool:
        return abs((S @ fi).trace) <= tol.eps * max(1.0, S.norm() * f.norm())

    return _select(sqrt_in_psl(h1_word(f, g), tol), involutive, "h1")


def build_h2(f: MoebiusMap, g: MoebiusMap, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> MoebiusMap:
    """The square root of the h2 word for which h2 g f g^-1 is elliptic with axis meeting f."""
    check_hypothesis(f, g, tol)
    f_prime = g @ f @ g.inverse()
    f_axis = axis_of(f, tol)
    return _select(sqrt_in_psl(h2_word(f, g, n), tol),
                   lambda S: meets_axis(S @ f_prime, f_axis, tol), "h2")


def build_h3(f: MoebiusMap, g: MoebiusMap, h1: MoebiusMap, n: int,
             tol: Tolerances = DEFAULT_TOLERANCES) -> MoebiusMap:
    """Defined when h1 is elliptic; the branch with h3 h1 elliptic and axis meeting f."""
    if classify_element(h1, tol).kind is not Kind.ELLIPTIC:
        raise NotApplicable("h3 is defined only when h1 is elliptic")
    f_axis = axis_of(f, tol)
    return _select(sqrt_in_psl(h3_word(f, g, h1, n), tol),
                   lambda S: meets_axis(S @ h1, f_axis, tol), "h3")


def tilde_h1_of(h1: MoebiusMap, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> MoebiusMap:
    """The primitive order-n square root of h1, when h1 rotates through 4 pi/n."""
    cls = classify_element(h1, tol)
    if n < 7:
        raise NotApplicable(f"h4 needs n >= 7, got n = {n}")
    if cls.kind is not Kind.ELLIPTIC or abs(cls.rotation_angle - 4 * math.pi / n) > tol.eps:
        raise NotApplicable("h1 is not a rotation through 4 pi/n")
    return _select(elliptic_kth_roots(h1, 2, tol),
                   lambda R: classify_element(R, tol).is_primitive_elliptic(n), "tilde h1")


def build_h4(f: MoebiusMap, g: MoebiusMap, h1: MoebiusMap, n: int,
             tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[MoebiusMap, MoebiusMap]:
    """Return (tilde_h1, h4); h4 is the branch with h4 f tilde_h1^-1 elliptic, axis meeting f."""
    th1 = tilde_h1_of(h1, n, tol)
    f_axis = axis_of(f, tol)
    th1_inv = th1.inverse()
    h4 = _select(sqrt_in_psl(h4_word(f, g, th1, n), tol),
                 lambda S: meets_axis(S @ f @ th1_inv, f_axis, tol), "h4")
    return th1, h4


def tilde_h2_of(h2: MoebiusMap, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> MoebiusMap:
    """The primitive elliptic of order 2n whose cube is h2 (h2 rotating through 3 pi/n)."""
    cls = classify_element(h2, tol)
    if cls.kind is not Kind.ELLIPTIC or abs(cls.rotation_angle - 3 * math.pi / n) > tol.eps:
        raise NotApplicable("h2 is not a rotation through 3 pi/n")
    return _select(elliptic_kth_roots(h2, 3, tol),
                   lambda R: classify_element(R, tol).is_primitive_elliptic(2 * n), "tilde h2")


# -- witness set ----------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessSet:
    """All witnesses defined for (f, g), with classes of the witnesses and of
    the auxiliary products used by the discreteness clauses.

    ``aux`` holds h2 g f g^-1, h3 h1, h4 f tilde_h1^-1 and tilde_h2^2 g f g^-1
    whenever the factors exist. ``skipped`` records why an optional witness is
    absent.
    """

    n: int
    h1: MoebiusMap
    h2: MoebiusMap
    h3: MoebiusMap | None = None
    h4: MoebiusMap | None = None
    tilde_h1: MoebiusMap | None = None
    tilde_h2: MoebiusMap | None = None
    aux: dict[str, MoebiusMap] = field(default_factory=dict)
    classes: dict[str, ElementClass] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)

    def elements(self) -> dict[str, MoebiusMap]:
        names = ("h1", "h2", "h3", "h4", "tilde_h1", "tilde_h2")
        return {k: getattr(self, k) for k in names if getattr(self, k) is not None}


def build_witnesses(f: MoebiusMap, g: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> WitnessSet:
    n = check_hypothesis(f, g, tol)
    h1 = build_h1(f, g, tol)
    h2 = build_h2(f, g, n, tol)
    f_prime = g @ f @ g.inverse()
    parts: dict = {"h1": h1, "h2": h2}
    aux = {"h2_fprime": h2 @ f_prime}
    skipped = {}

    try:
        h3 = build_h3(f, g, h1, n, tol)
        parts["h3"] = h3
        aux["h3_h1"] = h3 @ h1
    except NotApplicable as exc:
        skipped["h3"] = str(exc)
    try:
        th1, h4 = build_h4(f, g, h1, n, tol)
        parts["tilde_h1"], parts["h4"] = th1, h4
        aux["h4_f_th1inv"] = h4 @ f @ th1.inverse()
    except NotApplicable as exc:
        skipped["h4"] = str(exc)
    try:
        th2 = tilde_h2_of(h2, n, tol)
        parts["tilde_h2"] = th2
        aux["th2sq_fprime"] = th2 @ th2 @ f_prime
    except NotApplicable as exc:
        skipped["tilde_h2"] = str(exc)

    aux = {k: v.renormalized() for k, v in aux.items()}
    classes = {k: classify_element(v, tol) for k, v in {**parts, **aux}.items()}
    return WitnessSet(n=n, aux=aux, classes=classes, skipped=skipped, **parts)


def relation_residuals(f: MoebiusMap, g: MoebiusMap, W: WitnessSet,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> dict[str, float]:
    """Projective residuals of every defining relation of the witnesses present."""
    n = W.n
    I = MoebiusMap.identity()
    f_axis = axis_of(f, tol)
    out = {
        "h1^2 = g f g^-1 f": (W.h1 @ W.h1).proj_distance(h1_word(f, g)),
        "(h1 f^-1)^2 = 1": ((W.h1 @ f.inverse()) ** 2).proj_distance(I),
        "h2^2 = h2 word": (W.h2 @ W.h2).proj_distance(h2_word(f, g, n)),
        "h2 g f g^-1 axis meets f": axis_gap(W.aux["h2_fprime"], f_axis, tol),
    }
    if W.h3 is not None:
        out["h3^2 = h3 word"] = (W.h3 @ W.h3).proj_distance(h3_word(f, g, W.h1, n))
        out["h3 h1 axis meets f"] = axis_gap(W.aux["h3_h1"], f_axis, tol)
    if W.h4 is not None:
        out["tilde_h1^2 = h1"] = (W.tilde_h1 @ W.tilde_h1).proj_distance(W.h1)
        out["h4^2 = h4 word"] = (W.h4 @ W.h4).proj_distance(h4_word(f, g, W.tilde_h1, n))
        out["h4 f tilde_h1^-1 axis meets f"] = axis_gap(W.aux["h4_f_th1inv"], f_axis, tol)
    if W.tilde_h2 is not None:
        out["tilde_h2^3 = h2"] = (W.tilde_h2 ** 3).proj_distance(W.h2)
    return out
