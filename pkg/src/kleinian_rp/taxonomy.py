"""Decide whether an RP group is truly spatial, and say why when it is not."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import NotRealParameters
from .moebius import Kind, ParamTriple, classify_beta


class SpaceClass(str, Enum):
    ELEMENTARY = "elementary"
    INVARIANT_PLANE = "invariant_plane"
    TRULY_SPATIAL = "truly_spatial"
    DEGENERATE = "degenerate"


# Who decides discreteness for groups this package does not handle.
DELEGATES = {
    SpaceClass.ELEMENTARY: "elementary groups: use the classification of discrete elementary groups",
    SpaceClass.INVARIANT_PLANE: "invariant plane: use two-generator Fuchsian discreteness criteria, "
                                "or the non-Fuchsian invariant-plane criteria",
    SpaceClass.DEGENERATE: "order-2 generator: such groups are elementary or keep a plane invariant; "
                           "decide them with the invariant-plane criteria",
}


@dataclass(frozen=True)
class GroupSpaceClass:
    kind: SpaceClass
    k: int
    reason: str

    def to_dict(self) -> dict:
        return {"space_class": self.kind.value, "k": self.k, "reason": self.reason}


def pi_loxodromic_count(triple: ParamTriple, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    return sum(classify_beta(b, tol) is Kind.PI_LOXODROMIC for b in (triple.beta, triple.beta_prime))


def spatial_margin(triple: ParamTriple, k: int) -> float:
    """(-1)^(k+1) beta beta' / 4 - (-1)^k gamma; positive exactly when the inequality holds."""
    sign = -1.0 if k % 2 else 1.0
    return -sign * triple.beta * triple.beta_prime / 4 - sign * triple.gamma


def classify_pair(triple: ParamTriple, tol: Tolerances = DEFAULT_TOLERANCES) -> GroupSpaceClass:
    """Elementary / invariant plane / truly spatial, with the deciding reason.

    Elementary sub-cases are read off the parameters alone and are indicative
    only: the geometric cases need the axes, not just the traces.
    """
    if not all(math.isfinite(x) for x in triple):
        raise NotRealParameters("parameters must be finite reals")
    beta, beta_p, gamma = triple
    k = pi_loxodromic_count(triple, tol)
    if abs(gamma) <= tol.eps:
        return GroupSpaceClass(SpaceClass.ELEMENTARY, k, "gamma = 0: common fixed point")
    if abs(beta + 4) <= tol.eps or abs(beta_p + 4) <= tol.eps:
        return GroupSpaceClass(SpaceClass.DEGENERATE, k, "order-2 generator (beta or beta' = -4)")

    margin = spatial_margin(triple, k)
    scale = max(1.0, abs(beta * beta_p) / 4, abs(gamma))
    if margin > tol.eps * scale:
        return GroupSpaceClass(SpaceClass.TRULY_SPATIAL, k, "truly-spatial inequality holds")

    both_elliptic = all(classify_beta(b, tol) is Kind.ELLIPTIC for b in (beta, beta_p))
    side = "on the boundary" if abs(margin) <= tol.eps * scale else "fails"
    if both_elliptic and gamma < 0:
        # -beta beta'/4 <= gamma < 0: intersecting elliptic axes
        return GroupSpaceClass(SpaceClass.ELEMENTARY, k,
                               f"inequality {side}; elliptic generators with intersecting axes (indicative)")
    return GroupSpaceClass(SpaceClass.INVARIANT_PLANE, k, f"inequality {side}; invariant plane (indicative)")


def is_truly_spatial(triple: ParamTriple, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return classify_pair(triple, tol).kind is SpaceClass.TRULY_SPATIAL
