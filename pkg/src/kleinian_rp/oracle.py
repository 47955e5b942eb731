"""Discreteness decisions: the witness-based clause checker, the table
matcher, and `decide`, which runs both and reports whether they agree."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .config import DEFAULT_CAPS, DEFAULT_TOLERANCES, EnumCaps, Tolerances
from .errors import KleinianError, NotApplicable
from .moebius import (
    ElementClass,
    Kind,
    MoebiusMap,
    ParamTriple,
    classify_beta,
    construct_generators,
    elliptic_rotation_of_beta,
    normalize_primitive,
    params_of,
    primitive_power,
    classify_element,
)
from .table import ODD_ROWS, TableMatch, in_theorem_a_region, match_table
from .taxonomy import DELEGATES, GroupSpaceClass, SpaceClass, classify_pair
from .witnesses import WitnessSet, build_witnesses

CLAUSES = ("i", "ii", "iii", "iv", "v", "vi", "vii")

CLAUSE_TEXT = {
    "i": "h1 hyperbolic, parabolic or primitive of even order 2m with 2/n + 1/m < 1; "
         "h2 hyperbolic, parabolic or primitive of even order 2l, l >= 2",
    "ii": "h1, h2 rotate through pi/m, pi/l with (n, m, l) in the admissible list",
    "iii": "n = 3, h1 hyperbolic, h2 rotates through 4pi/k, h2 gfg^-1 primitive of order p, "
           "(k, p) = (6, 5) or (k, 3) with k >= 7, (k,4) <= 2",
    "iv": "h1 hyperbolic, h2 the cube of a primitive order-2n elliptic whose square times gfg^-1 "
          "rotates through 4pi/k, (n, k) = (5, 5) or (n, 4) with n >= 5, (n,3) = 1",
    "v": "h1 primitive of odd order m with 1/n + 1/m < 1/2; "
         "h3 hyperbolic, parabolic or primitive of even order 2k, k >= 2",
    "vi": "n = 3, h1 and h3 primitive of the same odd order m >= 7",
    "vii": "h1 the square of a primitive order-n elliptic, n >= 7; "
           "h4 hyperbolic, parabolic or primitive of even order >= 4",
}

SPORADIC_NML = {(5, Fraction(2), Fraction(5, 2)), (3, Fraction(5), Fraction(3, 2)),
                (5, Fraction(2), Fraction(5, 3)), (3, Fraction(5), Fraction(5, 4)),
                (5, Fraction(3), Fraction(5, 4)), (5, Fraction(2), Fraction(3, 2))}


# -- clause predicates ----------------------------------------------------------------


def _hyp_or_par(c: ElementClass) -> bool:
    return c.kind in (Kind.HYPERBOLIC, Kind.PARABOLIC)


def _prim_even(c: ElementClass) -> int | None:
    """Half the order when c is primitive elliptic of even order."""
    if c.is_primitive_elliptic() and c.order % 2 == 0:
        return c.order // 2
    return None


def _four_pi_over(c: ElementClass) -> int | None:
    """k with rotation angle 4 pi/k, if k is an integer."""
    if c.kind is not Kind.ELLIPTIC or c.rotation is None:
        return None
    k = 2 / c.rotation
    return int(k) if k.denominator == 1 else None


def admissible_nml(n: int, m: Fraction, l: Fraction) -> bool:
    if (n, m, l) in SPORADIC_NML:
        return True
    if m.denominator != 1:
        return False
    mi = int(m)
    if n == 3 and mi >= 4 and math.gcd(mi, 3) == 1 and l == m / 3:
        return True
    return mi == 3 and n >= 5 and math.gcd(n, 3) == 1 and l == Fraction(n, 3)


def _clause(name: str, W: WitnessSet) -> tuple[bool, str]:
    n, cl = W.n, W.classes
    h1, h2 = cl["h1"], cl["h2"]
    if name == "i":
        m = _prim_even(h1)
        ok1 = _hyp_or_par(h1) or (m is not None and Fraction(2, n) + Fraction(1, m) < 1)
        l = _prim_even(h2)
        ok2 = _hyp_or_par(h2) or (l is not None and l >= 2)
        return ok1 and ok2, f"h1 {h1.kind.value} order {h1.order}; h2 {h2.kind.value} order {h2.order}"
    if name == "ii":
        m, l = h1.pi_over(), h2.pi_over()
        if m is None or l is None:
            return False, "h1 or h2 is not a rational rotation"
        return admissible_nml(n, m, l), f"(n, m, l) = ({n}, {m}, {l})"
    if name == "iii":
        if n != 3 or h1.kind is not Kind.HYPERBOLIC:
            return False, "needs n = 3 and h1 hyperbolic"
        k = _four_pi_over(h2)
        q = cl["h2_fprime"]
        p = q.order if q.is_primitive_elliptic() else None
        if k is None or p is None:
            return False, "h2 angle not 4pi/k or h2 gfg^-1 not primitive elliptic"
        ok = (k, p) == (6, 5) or (p == 3 and k >= 7 and math.gcd(k, 4) <= 2)
        return ok, f"(k, p) = ({k}, {p})"
    if name == "iv":
        if h1.kind is not Kind.HYPERBOLIC or "th2sq_fprime" not in cl:
            return False, "needs h1 hyperbolic and h2 the cube of a primitive order-2n elliptic"
        k = _four_pi_over(cl["th2sq_fprime"])
        if k is None:
            return False, "tilde h2^2 gfg^-1 angle is not 4pi/k"
        ok = (n, k) == (5, 5) or (k == 4 and n >= 5 and math.gcd(n, 3) == 1)
        return ok, f"(n, k) = ({n}, {k})"
    if name == "v":
        if not (h1.is_primitive_elliptic() and h1.order % 2 == 1
                and Fraction(1, n) + Fraction(1, h1.order) < Fraction(1, 2)):
            return False, "h1 is not primitive of odd order m with 1/n + 1/m < 1/2"
        h3 = cl["h3"]
        k = _prim_even(h3)
        return _hyp_or_par(h3) or (k is not None and k >= 2), f"h3 {h3.kind.value} order {h3.order}"
    if name == "vi":
        if n != 3 or "h3" not in cl:
            return False, "needs n = 3 and h1 elliptic"
        h3 = cl["h3"]
        ok = (h1.is_primitive_elliptic() and h3.is_primitive_elliptic() and h1.order == h3.order
              and h1.order >= 7 and h1.order % 2 == 1)
        return ok, f"orders {h1.order}, {h3.order}"
    if name == "vii":
        if "h4" not in cl:
            return False, W.skipped.get("h4", "h4 undefined")
        h4 = cl["h4"]
        k = _prim_even(h4)
        return _hyp_or_par(h4) or (k is not None and 2 * k >= 4), f"h4 {h4.kind.value} order {h4.order}"
    raise ValueError(name)


@dataclass(frozen=True)
class ClauseResult:
    clause: str | None
    satisfied: tuple[str, ...]
    notes: dict[str, str]
    classes: dict[str, ElementClass]

    @property
    def discrete(self) -> bool:
        return self.clause is not None

    def to_dict(self) -> dict:
        return {"clause": self.clause, "satisfied": list(self.satisfied), "notes": self.notes,
                "classes": {k: v.to_dict() for k, v in self.classes.items()}}


def check_theorem_a(f: MoebiusMap, g: MoebiusMap, W: WitnessSet | None = None,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> ClauseResult:
    """Evaluate clauses (i)..(vii) in order; the first satisfied one decides."""
    if W is None:
        W = build_witnesses(f, g, tol)
    sat, notes = [], {}
    for name in CLAUSES:
        ok, why = _clause(name, W)
        notes[name] = why
        if ok:
            sat.append(name)
    return ClauseResult(sat[0] if sat else None, tuple(sat), notes, dict(W.classes))


def boundary_margin(W: WitnessSet, max_den: int = 64) -> float:
    """Distance of the witness classes from the nearest clause boundary.

    Boundaries are the parabolic locus (beta = 0) and the elliptic rotations
    2 pi q/d with d <= max_den.
    """
    margin = math.inf
    for c in W.classes.values():
        b = c.beta.real
        margin = min(margin, abs(b))
        if c.kind is Kind.ELLIPTIC:
            x = c.rotation_angle / (2 * math.pi)
            r = Fraction(x).limit_denominator(max_den)
            margin = min(margin, 2 * math.pi * abs(x - float(r)))
    return margin


# -- decide ---------------------------------------------------------------------------


class Status(str, Enum):
    DISCRETE = "discrete"
    NOT_DISCRETE = "not_discrete"
    OUT_OF_SCOPE = "out_of_scope"


@dataclass(frozen=True)
class DiscretenessVerdict:
    status: Status
    triple: ParamTriple
    space: GroupSpaceClass
    matched_rows: tuple[TableMatch, ...] = ()
    theorem_a: ClauseResult | None = None
    agreement: bool | None = None
    normalized: ParamTriple | None = None
    delegate: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def theorem_a_clause(self) -> str | None:
        return self.theorem_a.clause if self.theorem_a else None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "triple": self.triple.to_dict(),
            "normalized_triple": self.normalized.to_dict() if self.normalized else None,
            **self.space.to_dict(),
            "matched_rows": [m.to_dict() for m in self.matched_rows],
            "theorem_a_clause": self.theorem_a_clause,
            "theorem_a": self.theorem_a.to_dict() if self.theorem_a else None,
            "agreement": self.agreement,
            "delegate": self.delegate,
            "notes": list(self.notes),
        }


def _primitive_triple(t: ParamTriple, tol: Tolerances) -> tuple[ParamTriple, list[str]]:
    notes = []
    for swap in (False, True):
        if swap:
            t = t.swapped()
        if classify_beta(t.beta, tol) is Kind.ELLIPTIC:
            r = elliptic_rotation_of_beta(t.beta, tol)
            if r is not None and r.numerator > 1:
                t = normalize_primitive(t, r.numerator, r.denominator, tol)
                notes.append(f"{'g' if swap else 'f'} replaced by its primitive power "
                             f"(rotation {r.numerator}/{r.denominator} of a full turn)")
        if swap:
            t = t.swapped()
    return t, notes


def _primitive_pair(f: MoebiusMap, g: MoebiusMap, tol: Tolerances) -> tuple[MoebiusMap, MoebiusMap, list[str]]:
    notes = []
    out = []
    for name, M in (("f", f), ("g", g)):
        c = classify_element(M, tol)
        if c.kind is Kind.ELLIPTIC and c.rotation is not None and c.rotation.numerator > 1:
            M, r = primitive_power(M, tol)
            notes.append(f"{name} replaced by {name}^{r}")
        out.append(M)
    return out[0], out[1], notes


def decide(data: ParamTriple | Sequence[MoebiusMap], tol: Tolerances = DEFAULT_TOLERANCES,
           caps: EnumCaps = DEFAULT_CAPS) -> DiscretenessVerdict:
    """Decide discreteness of <f, g> from a parameter triple or a generator pair."""
    pair = None
    if isinstance(data, ParamTriple):
        triple = data
    else:
        f, g = data
        triple = params_of(f, g, tol)
        pair = (f, g)

    space = classify_pair(triple, tol)
    if space.kind is not SpaceClass.TRULY_SPATIAL:
        return DiscretenessVerdict(Status.OUT_OF_SCOPE, triple, space, delegate=DELEGATES[space.kind])
    if space.k > 0:
        return DiscretenessVerdict(
            Status.OUT_OF_SCOPE, triple, space,
            delegate="pi-loxodromic generators have non-real traces; the table covers real traces only")

    if pair is not None:
        f, g, notes = _primitive_pair(*pair, tol)
        work = params_of(f, g, tol)
    else:
        work, notes = _primitive_triple(triple, tol)
    matches = [m for m in match_table(work, caps, tol)]
    matches += [TableMatch(m.row, m.params, swapped=True) for m in match_table(work.swapped(), caps, tol)]

    clause, agreement = None, None
    for swapped in (False, True):
        t = work.swapped() if swapped else work
        if not in_theorem_a_region(t):
            continue
        r = elliptic_rotation_of_beta(t.beta, tol)
        if r is None or r.numerator != 1 or r.denominator % 2 == 0:
            continue
        try:
            if pair is not None:
                ff, gg = (g, f) if swapped else (f, g)
            else:
                ff, gg = construct_generators(t, tol)
            clause = check_theorem_a(ff, gg, tol=tol)
        except (NotApplicable, KleinianError) as exc:
            notes.append(f"witness path failed: {exc}")
            break
        odd_rows = [m for m in matches if m.row in ODD_ROWS and m.swapped == swapped]
        agreement = bool(odd_rows) == clause.discrete
        if not agreement:
            notes.append("table match and witness clauses disagree")
        break

    discrete = bool(matches) or (clause is not None and clause.discrete)
    status = Status.DISCRETE if discrete else Status.NOT_DISCRETE
    return DiscretenessVerdict(status, triple, space, tuple(matches), clause, agreement,
                               work if work != triple else None, None, tuple(notes))
