"""Check that the 3-5-3 tetrahedral orbifold group is generated by a pair with
real parameters.

The pair (f, g) is the discrete group with n = 5, m = 2, l = 3/2: f has order
5, h1 rotates through pi/2 and h2 through 2pi/3. The half-turn e of the larger
group is then an explicit word in f and g. Everything here is numerical
verification of that word and of the geometry it implies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import ConstructionFailure
from .geometry import act_on_point, axes_relation, axis_of, foot_on, point_distance
from .moebius import MoebiusMap, ParamTriple, commutator, construct_generators, evaluate_word
from .table import match_table
from .witnesses import build_h1, build_h2

E_WORD = "f^3 g f g^-1 f^3 g^-1 f^2 g f^3 g f^2 g^-1 f^3 g^-1 f g f^2 g f^-1 g^-1"
X_WORD = "g f g^-1 f^3 g^-1 f g f^2 g f^-1 g^-1"
E1_WORD = "g f g^-1 f^3 g^-1 f^2 g f^3 g f^2 g^-1 f^3 g^-1 f g f^2 g f^-1 g^-1"

N, M, L = 5, 2, 1.5


def parameters(n: int = N, m: float = M, l: float = L) -> ParamTriple:
    """(beta, beta', gamma) of the group with h1, h2 rotating through pi/m, pi/l."""
    beta = -4 * math.sin(math.pi / n) ** 2
    gamma = 2 * (math.cos(math.pi / m) + math.cos(2 * math.pi / n))
    beta_p = (2 * math.cos(math.pi / l) / gamma
              - math.sqrt(beta + 4) * (beta + (gamma - beta) ** 2) / (gamma * beta)
              - 2 * gamma / beta - 2)
    return ParamTriple(beta, beta_p, gamma)


@dataclass(frozen=True)
class Gamma353Report:
    triple: ParamTriple
    matched_rows: tuple[int, ...]
    max_imag_parameter: float
    e_trace: complex
    e_square_residual: float
    angle_e_f: float
    angle_e_g: float
    common_point_residual: float
    h1_fourth_residual: float
    h2_cube_residual: float
    x_word_residual: float
    z_cube_residual: float
    e1_word_residual: float
    e1_trace: complex
    e_from_e1_residual: float
    renorm_residuals: dict[int, float] = field(default_factory=dict)
    tol_trace: float = 1e-8
    tol_axis: float = 1e-7
    tol_imag: float = 1e-10

    @property
    def e_order2(self) -> bool:
        return self.e_square_residual <= self.tol_trace

    def checks(self) -> dict[str, bool]:
        half = math.pi / 2
        t, a = self.tol_trace, self.tol_axis
        return {
            "row match": bool(self.matched_rows),
            "real parameters": self.max_imag_parameter <= self.tol_imag,
            "tr e = 0": abs(self.e_trace) <= t,
            "e^2 = 1": self.e_order2,
            "axis(e) orthogonal to axis(f)": abs(self.angle_e_f - half) <= a,
            "axis(e) orthogonal to axis(g)": abs(self.angle_e_g - half) <= a,
            "axis(e) through axis(f) ^ axis(g)": self.common_point_residual <= a,
            "h1^4 = 1": self.h1_fourth_residual <= t,
            "h2^3 = 1": self.h2_cube_residual <= t,
            "x = h2 h1^2": self.x_word_residual <= t,
            "z^3 = 1": self.z_cube_residual <= t,
            "e1 = x z": self.e1_word_residual <= t,
            "e1 is a half-turn": abs(self.e1_trace) <= t,
            "e = f^3 e1": self.e_from_e1_residual <= t,
            "renormalization": self.renorm_residuals[4] <= self.renorm_residuals[16] + 1e-10,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks().values())

    def to_dict(self) -> dict:
        c = lambda z: [z.real, z.imag]  # noqa: E731
        return {
            "triple": self.triple.to_dict(),
            "matched_rows": list(self.matched_rows),
            "max_imag_parameter": self.max_imag_parameter,
            "e_trace": c(self.e_trace),
            "e_square_residual": self.e_square_residual,
            "angle_e_f": self.angle_e_f,
            "angle_e_g": self.angle_e_g,
            "common_point_residual": self.common_point_residual,
            "h1_fourth_residual": self.h1_fourth_residual,
            "h2_cube_residual": self.h2_cube_residual,
            "x_word_residual": self.x_word_residual,
            "z_cube_residual": self.z_cube_residual,
            "e1_word_residual": self.e1_word_residual,
            "e1_trace": c(self.e1_trace),
            "e_from_e1_residual": self.e_from_e1_residual,
            "renorm_residuals": {str(k): v for k, v in self.renorm_residuals.items()},
            "checks": self.checks(),
            "ok": self.ok,
        }


def verify_353(tol: Tolerances = DEFAULT_TOLERANCES) -> Gamma353Report:
    triple = parameters()
    rows = tuple(sorted({m.row for m in match_table(triple, tol=tol)}))
    try:
        f, g = construct_generators(triple, tol)
    except Exception as exc:
        raise ConstructionFailure(f"could not realize {triple}: {exc}") from exc
    gens = {"f": f, "g": g}
    I = MoebiusMap.identity()

    raw = (f.trace ** 2 - 4, g.trace ** 2 - 4, commutator(f, g).trace - 2)
    max_imag = max(abs(z.imag) for z in raw)

    e = evaluate_word(E_WORD, gens)
    ax_e, ax_f, ax_g = axis_of(e, tol), axis_of(f, tol), axis_of(g, tol)
    ang_f = axes_relation(ax_e, ax_f, tol, eps=tol.eps_axis).angle or 0.0
    ang_g = axes_relation(ax_e, ax_g, tol, eps=tol.eps_axis).angle or 0.0
    P = foot_on(ax_f, ax_g)
    common = point_distance(act_on_point(e, P), P)

    h1 = build_h1(f, g, tol)
    h2 = build_h2(f, g, N, tol)
    x = evaluate_word(X_WORD, gens)
    y = x @ f.inverse()
    z = y @ x
    e1 = evaluate_word(E1_WORD, gens)

    renorm = {k: abs(evaluate_word(E_WORD, gens, period=k).trace) for k in (4, 16)}
    return Gamma353Report(
        triple=triple,
        matched_rows=rows,
        max_imag_parameter=max_imag,
        e_trace=e.trace,
        e_square_residual=(e @ e).proj_distance(I),
        angle_e_f=ang_f,
        angle_e_g=ang_g,
        common_point_residual=common,
        h1_fourth_residual=(h1 ** 4).proj_distance(I),
        h2_cube_residual=(h2 ** 3).proj_distance(I),
        x_word_residual=x.proj_distance(h2 @ h1 @ h1),
        z_cube_residual=(z ** 3).proj_distance(I),
        e1_word_residual=e1.proj_distance(x @ z),
        e1_trace=e1.trace,
        e_from_e1_residual=e.proj_distance(f ** 3 @ e1),
        renorm_residuals=renorm,
    )
