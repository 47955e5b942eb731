"""The 41-row classification table of truly spatial discrete RP groups.

A row gives beta, gamma and beta' as closed forms. A column is one of:

* ``Const``: a value computed from what is already known about the row,
* ``Family``: ``a + b * kernel(j)`` for one integer parameter ``j``,
* ``Interval``: a half-line (closed or open at its finite end).

Columns are solved left to right (beta, gamma, beta'), so later columns may
refer to earlier values and to integer parameters already fixed. Matching
inverts each family in closed form and confirms the rounded integer by
re-evaluating; enumeration walks the integer ranges under caps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from .config import DEFAULT_CAPS, DEFAULT_TOLERANCES, EnumCaps, Tolerances
from .errors import InvalidRow
from .moebius import ParamTriple
from .taxonomy import is_truly_spatial

SQ5 = math.sqrt(5.0)
Ctx = Mapping[str, float]

# kernel name -> (forward, inverse); forward maps an integer j >= 2 into [-1, 1]
KERNELS: dict[str, tuple[Callable[[int], float], Callable[[float], float | None]]] = {
    "cos_pi": (lambda j: math.cos(math.pi / j),
               lambda y: math.pi / math.acos(y) if -1 <= y < 1 else None),
    "cos_2pi": (lambda j: math.cos(2 * math.pi / j),
                lambda y: 2 * math.pi / math.acos(y) if -1 <= y < 1 else None),
    "cos2_pi": (lambda j: math.cos(math.pi / j) ** 2,
                lambda y: math.pi / math.acos(math.sqrt(y)) if 0 <= y < 1 else None),
}


def _always(j: int, ctx: Ctx) -> bool:
    return True


def odd(j: int, ctx: Ctx) -> bool:
    return j % 2 == 1


def even(j: int, ctx: Ctx) -> bool:
    return j % 2 == 0


def coprime3(j: int, ctx: Ctx) -> bool:
    return math.gcd(j, 3) == 1


def odd_coprime3(j: int, ctx: Ctx) -> bool:
    return j % 2 == 1 and math.gcd(j, 3) == 1


def gcd4_le2(j: int, ctx: Ctx) -> bool:
    return math.gcd(j, 4) <= 2


@dataclass(frozen=True)
class Const:
    value: Callable[[Ctx], float]
    text: str


@dataclass(frozen=True)
class Family:
    """a(ctx) + b(ctx) * kernel(j), with j >= lo satisfying `cond`."""

    param: str
    kernel: str
    lo: int
    a: Callable[[Ctx], float]
    b: Callable[[Ctx], float]
    text: str
    cond: Callable[[int, Ctx], bool] = _always

    def at(self, j: int, ctx: Ctx) -> float:
        return self.a(ctx) + self.b(ctx) * KERNELS[self.kernel][0](j)

    def candidates(self, x: float, ctx: Ctx, cap: int) -> list[int]:
        b = self.b(ctx)
        if b == 0:
            return []
        est = KERNELS[self.kernel][1]((x - self.a(ctx)) / b)
        if est is None or not math.isfinite(est):
            return []
        lo, hi = max(self.lo, math.floor(est) - 1), min(cap, math.ceil(est) + 1)
        return [j for j in range(lo, hi + 1) if self.cond(j, ctx)]


@dataclass(frozen=True)
class Interval:
    """[lo, +inf) or (-inf, hi]; `open_end` excludes the finite endpoint."""

    text: str
    lo: Callable[[Ctx], float] | None = None
    hi: Callable[[Ctx], float] | None = None
    open_end: bool = False

    def contains(self, x: float, ctx: Ctx, atol: float) -> bool:
        if self.lo is not None:
            edge = self.lo(ctx)
            return x > edge + atol if self.open_end else x >= edge - atol
        edge = self.hi(ctx)
        return x < edge - atol if self.open_end else x <= edge + atol

    def samples(self, ctx: Ctx, offsets: tuple[float, ...]) -> list[tuple[float, float]]:
        """(offset, value) pairs inside the interval; the endpoint is offset 0."""
        if self.lo is not None:
            edge, sign = self.lo(ctx), 1.0
        else:
            edge, sign = self.hi(ctx), -1.0
        offs = [o for o in offsets if o > 0] if self.open_end else list(offsets)
        return [(o, edge + sign * o) for o in offs]


Column = Const | Family | Interval


@dataclass(frozen=True)
class TableRow:
    index: int
    beta: Column
    gamma: Column
    beta_prime: Column
    section: str
    # applied once every column is solved
    extra: Callable[[Ctx], bool] = lambda ctx: True
    extra_text: str = ""

    @property
    def columns(self) -> tuple[tuple[str, Column], ...]:
        return (("beta", self.beta), ("gamma", self.gamma), ("beta_prime", self.beta_prime))

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(c.param for _, c in self.columns if isinstance(c, Family))

    def describe(self) -> str:
        parts = [f"beta = {self.beta.text}", f"gamma = {self.gamma.text}",
                 f"beta' = {self.beta_prime.text}"]
        if self.extra_text:
            parts.append(self.extra_text)
        return "; ".join(parts)


@dataclass(frozen=True)
class TableMatch:
    row: int
    params: dict[str, int] = field(default_factory=dict)
    # matched with the generators exchanged, i.e. as (beta', beta, gamma)
    swapped: bool = False

    def to_dict(self) -> dict:
        return {"row": self.row, "params": dict(self.params), "swapped": self.swapped}


@dataclass(frozen=True)
class RowInstance:
    row: int
    triple: ParamTriple
    params: dict[str, int]
    offsets: dict[str, float]

    def sort_key(self):
        return (self.row, tuple(sorted(self.params.items())), tuple(sorted(self.offsets.items())))

    def to_dict(self) -> dict:
        return {"row": self.row, **self.triple.to_dict(), "params": self.params,
                "offsets": self.offsets}


# -- shared closed forms --------------------------------------------------------------


def cos_n(ctx: Ctx) -> float:
    return math.cos(math.pi / ctx["n"])


def U(ctx: Ctx) -> float:
    b, g = ctx["beta"], ctx["gamma"]
    return -2 * ((g - b) ** 2 * cos_n(ctx) + g * (g + b)) / (g * b)


def V_printed(ctx: Ctx) -> float:
    b = ctx["beta"]
    return -2 * (b + 2) ** 2 * cos_n(ctx) / (b + 1) - 2 * (b * b + 6 * b + 4) / b


def V(ctx: Ctx) -> float:
    # the printed V lacks the factor beta in the first denominator; with it,
    # rows 27-28 put h4 at the orders they claim (checked against the witnesses)
    b = ctx["beta"]
    return -2 * (b + 2) ** 2 * cos_n(ctx) / (b * (b + 1)) - 2 * (b * b + 6 * b + 4) / b


def beta_n(lo: int, cond=_always, text: str = "") -> Family:
    # -4 sin^2(pi/n) = 2 cos(2 pi/n) - 2
    return Family("n", "cos_2pi", lo, lambda c: -2.0, lambda c: 2.0,
                  text or f"-4 sin^2(pi/n), n >= {lo}", cond)


def beta_prime_m(lo: int) -> Family:
    return Family("m", "cos_2pi", lo, lambda c: -2.0, lambda c: 2.0, f"-4 sin^2(pi/m), m >= {lo}")


def gamma_p(lo: int = 3) -> Family:
    return Family("p", "cos2_pi", lo, lambda c: 0.0, lambda c: -4.0, f"-4 cos^2(pi/p), p >= {lo}")


def gamma_mn(cond, parity: str) -> Family:
    return Family("m", "cos_2pi", 2, lambda c: 2 * math.cos(2 * math.pi / c["n"]), lambda c: 2.0,
                  f"2(cos(2pi/m) + cos(2pi/n)), m {parity}", cond)


def const(v: float, text: str) -> Const:
    return Const(lambda c: v, text)


def small_mn(ctx: Ctx) -> bool:
    return 1 / ctx["n"] + 1 / ctx["m"] < 0.5


NEG_HALF_LINE = Interval("(-inf, -4]", hi=lambda c: -4.0)
NONNEG = Interval("[0, +inf)", lo=lambda c: 0.0)
POSITIVE = Interval("(0, +inf)", lo=lambda c: 0.0, open_end=True)
GAMMA_GE = Interval("[beta + 4, +inf)", lo=lambda c: c["beta"] + 4)

S_ELL = "both generators elliptic, mutually orthogonal skew axes"
S_PAR = "f elliptic, g parabolic, axis of f in an invariant plane of g"
S_PH = "f and g parabolic or hyperbolic with mutually orthogonal invariant planes"
S_DIS = "f elliptic, g hyperbolic, disjoint axes"
S_EVEN = "f elliptic of even order, g hyperbolic, axes intersect non-orthogonally"
S_ODD = "f elliptic of odd order, g hyperbolic, axes intersect non-orthogonally"


def _rows(printed: bool = False) -> tuple[TableRow, ...]:
    rows: list[TableRow] = []

    def add(*cols, section, extra=None, extra_text=""):
        kw = {"extra": extra} if extra else {}
        rows.append(TableRow(len(rows) + 1, *cols, section=section, extra_text=extra_text, **kw))

    add(beta_n(3), gamma_p(), beta_prime_m(3), section=S_ELL,
        extra=lambda c: math.cos(math.pi / c["p"]) > math.sin(math.pi / c["n"]) * math.sin(math.pi / c["m"]),
        extra_text="cos(pi/p) > sin(pi/n) sin(pi/m)")
    add(beta_n(3), NEG_HALF_LINE, beta_prime_m(3), section=S_ELL)
    add(beta_n(7, odd, "-4 sin^2(pi/n), n >= 7 odd"), Const(lambda c: -(c["beta"] + 2) ** 2, "-(beta + 2)^2"),
        Const(lambda c: c["beta"], "beta"), section=S_ELL)
    add(beta_n(3), gamma_p(), const(0.0, "0"), section=S_PAR)
    add(beta_n(3), NEG_HALF_LINE, const(0.0, "0"), section=S_PAR)
    add(NONNEG, gamma_p(), NONNEG, section=S_PH)
    add(NONNEG, NEG_HALF_LINE, NONNEG, section=S_PH)
    add(beta_n(3), gamma_p(), POSITIVE, section=S_DIS)
    add(beta_n(3), NEG_HALF_LINE, POSITIVE, section=S_DIS)

    b_odd5 = beta_n(5, odd, "-4 sin^2(pi/n), n >= 5 odd")
    sq = Const(lambda c: -(c["beta"] + 2) ** 2, "-(beta + 2)^2")
    add(b_odd5, sq, Family("p", "cos2_pi", 4, lambda c: -4.0, lambda c: 4 * (c["beta"] + 4),
                           "4(beta + 4) cos^2(pi/p) - 4, p >= 4"), section=S_DIS)
    add(b_odd5, sq, Interval("[4(beta + 3), +inf)", lo=lambda c: 4 * (c["beta"] + 3)), section=S_DIS)
    g12 = const((SQ5 - 3) / 2, "(sqrt5 - 3)/2")
    add(const(-3.0, "-3"), g12, Family("p", "cos2_pi", 3, lambda c: -4.0, lambda c: 2 * (7 + 3 * SQ5),
                                       "2 cos^2(pi/p)(7 + 3 sqrt5) - 4, p >= 3"), section=S_DIS)
    add(const(-3.0, "-3"), g12, Interval("[2(5 + 3 sqrt5), +inf)", lo=lambda c: 2 * (5 + 3 * SQ5)),
        section=S_DIS)

    b_even = beta_n(4, even, "-4 sin^2(pi/n), n >= 4 even")
    bp14 = Family("p", "cos2_pi", 3, lambda c: -4 * c["gamma"] / c["beta"], lambda c: 4 / c["gamma"],
                  "4 cos^2(pi/p)/gamma - 4 gamma/beta, p >= 3")
    bp15 = Interval("[4/gamma - 4 gamma/beta, +inf)", lo=lambda c: 4 / c["gamma"] - 4 * c["gamma"] / c["beta"])
    bp18 = Family("p", "cos2_pi", 3, lambda c: -4 * c["gamma"] / c["beta"],
                  lambda c: 4 * (c["gamma"] - c["beta"]) / c["gamma"],
                  "4(gamma - beta)/gamma cos^2(pi/p) - 4 gamma/beta, p >= 3")
    bp19 = Interval("[4(gamma - beta)/gamma - 4 gamma/beta, +inf)",
                    lo=lambda c: 4 * (c["gamma"] - c["beta"]) / c["gamma"] - 4 * c["gamma"] / c["beta"])
    mn = dict(extra=small_mn, extra_text="1/n + 1/m < 1/2")
    add(b_even, gamma_mn(even, "even"), bp14, section=S_EVEN, **mn)
    add(b_even, gamma_mn(even, "even"), bp15, section=S_EVEN, **mn)
    add(b_even, GAMMA_GE, bp14, section=S_EVEN)
    add(b_even, GAMMA_GE, bp15, section=S_EVEN)
    add(b_even, gamma_mn(odd, "odd"), bp18, section=S_EVEN, **mn)
    add(b_even, gamma_mn(odd, "odd"), bp19, section=S_EVEN, **mn)
    add(const(-2.0, "-2"), Family("m", "cos_2pi", 5, lambda c: 0.0, lambda c: 2.0, "2 cos(2pi/m), m >= 5 odd", odd),
        Const(lambda c: c["gamma"] ** 2 + 4 * c["gamma"], "gamma^2 + 4 gamma"), section=S_EVEN)

    b_odd = beta_n(3, odd, "-4 sin^2(pi/n), n >= 3 odd")
    bp21 = Family("p", "cos_pi", 2, lambda c: U(c) - 2 * cos_n(c) / c["gamma"], lambda c: 2 / c["gamma"],
                  "(2/gamma)(cos(pi/p) - cos(pi/n)) + U, p >= 2")
    bp22 = Interval("[2(1 - cos(pi/n))/gamma + U, +inf)", lo=lambda c: 2 * (1 - cos_n(c)) / c["gamma"] + U(c))
    bp25 = Family("p", "cos_pi", 2, U, lambda c: 2 * (c["gamma"] - c["beta"]) / c["gamma"],
                  "2(gamma - beta)/gamma cos(pi/p) + U, p >= 2")
    bp26 = Interval("[2(gamma - beta)/gamma + U, +inf)", lo=lambda c: 2 * (c["gamma"] - c["beta"]) / c["gamma"] + U(c))
    add(b_odd, gamma_mn(even, "even"), bp21, section=S_ODD, **mn)
    add(b_odd, gamma_mn(even, "even"), bp22, section=S_ODD, **mn)
    add(b_odd, GAMMA_GE, bp21, section=S_ODD)
    add(b_odd, GAMMA_GE, bp22, section=S_ODD)
    add(b_odd, gamma_mn(odd, "odd"), bp25, section=S_ODD, **mn)
    add(b_odd, gamma_mn(odd, "odd"), bp26, section=S_ODD, **mn)

    b_odd7 = beta_n(7, odd, "-4 sin^2(pi/n), n >= 7 odd")
    g27 = Const(lambda c: (c["beta"] + 4) * (c["beta"] + 1), "(beta + 4)(beta + 1)")
    v = V_printed if printed else V
    add(b_odd7, g27, Family("p", "cos_pi", 2, v, lambda c: 2 * (c["beta"] + 2) ** 2 / (c["beta"] + 1),
                            "2(beta + 2)^2 cos(pi/p)/(beta + 1) + V, p >= 2"), section=S_ODD)
    add(b_odd7, g27, Interval("[2(beta + 2)^2/(beta + 1) + V, +inf)",
                              lo=lambda c: 2 * (c["beta"] + 2) ** 2 / (c["beta"] + 1) + v(c)), section=S_ODD)

    b29 = beta_n(5, odd_coprime3, "-4 sin^2(pi/n), n >= 5 odd, (n,3) = 1")
    add(b29, Const(lambda c: c["beta"] + 3, "beta + 3"),
        Const(lambda c: 2 * ((c["beta"] - 3) * cos_n(c) - 2 * c["beta"] - 3) / c["beta"],
              "2((beta - 3) cos(pi/n) - 2 beta - 3)/beta"), section=S_ODD)
    add(b29, Const(lambda c: 2 * (c["beta"] + 3), "2(beta + 3)"),
        Const(lambda c: -6 * (2 * cos_n(c) + c["beta"] + 2) / c["beta"], "-6(2 cos(pi/n) + beta + 2)/beta"),
        section=S_ODD)

    m3 = const(-3.0, "-3")
    r31 = 2 if printed else 3
    add(m3, Family("m", "cos_2pi", 7, lambda c: -1.0, lambda c: 2.0, "2 cos(2pi/m) - 1, m >= 7 odd", odd),
        Const(lambda c: 2 * (c["gamma"] ** 2 + 2 * c["gamma"] + r31) / c["gamma"],
              f"2(gamma^2 + 2 gamma + {r31})/gamma"),
        section=S_ODD)
    add(m3, Family("m", "cos_pi", 4, lambda c: -1.0, lambda c: 2.0, "2 cos(pi/m) - 1, m >= 4, (m,3) = 1", coprime3),
        Const(lambda c: c["gamma"] ** 2 + 4 * c["gamma"], "gamma^2 + 4 gamma"), section=S_ODD)
    add(m3, Family("m", "cos_2pi", 7, lambda c: 0.0, lambda c: 2.0, "2 cos(2pi/m), m >= 7, (m,4) <= 2", gcd4_le2),
        Const(lambda c: 2 * c["gamma"], "2 gamma"), section=S_ODD)

    b5 = const((SQ5 - 5) / 2, "(sqrt5 - 5)/2")
    r41 = 5 if printed else 7
    sporadic = [
        (m3, ((SQ5 + 1) / 2, "(sqrt5 + 1)/2"), (SQ5, "sqrt5")),
        (m3, ((SQ5 - 1) / 2, "(sqrt5 - 1)/2"), (SQ5, "sqrt5")),
        (m3, ((SQ5 - 1) / 2, "(sqrt5 - 1)/2"), (SQ5 - 1, "sqrt5 - 1")),
        (b5, ((SQ5 - 1) / 2, "(sqrt5 - 1)/2"), (SQ5, "sqrt5")),
        (b5, ((SQ5 - 1) / 2, "(sqrt5 - 1)/2"), ((3 * SQ5 - 1) / 2, "(3 sqrt5 - 1)/2")),
        (b5, ((SQ5 - 1) / 2, "(sqrt5 - 1)/2"), (3 * (SQ5 + 1) / 2, "3(sqrt5 + 1)/2")),
        (b5, ((SQ5 + 1) / 2, "(sqrt5 + 1)/2"), (3 * (SQ5 + 1) / 2, "3(sqrt5 + 1)/2")),
        (b5, (SQ5 + 2, "sqrt5 + 2"), ((r41 * SQ5 + 9) / 2, f"({r41} sqrt5 + 9)/2")),
    ]
    for b, g, bp in sporadic:
        add(b, const(*g), const(*bp), section=S_ODD)
    assert len(rows) == 41
    return tuple(rows)


ROWS: tuple[TableRow, ...] = _rows()
# the forms exactly as printed; rows 27, 28, 31 and 41 differ from ROWS
PRINTED_ROWS: tuple[TableRow, ...] = _rows(printed=True)
TABLES = {"corrected": ROWS, "printed": PRINTED_ROWS}
CORRECTIONS = {
    27: "V = -2(beta+2)^2 cos(pi/n)/(beta(beta+1)) - 2(beta^2+6beta+4)/beta (printed: /(beta+1))",
    28: "same V as row 27",
    31: "beta' = 2(gamma^2 + 2 gamma + 3)/gamma (printed: + 2)",
    41: "beta' = (7 sqrt5 + 9)/2 (printed: (5 sqrt5 + 9)/2, which is not truly spatial)",
}
# rows where the generator pair is odd-order elliptic times hyperbolic with intersecting axes
ODD_ROWS = range(21, 42)


def _table(variant: str) -> tuple[TableRow, ...]:
    try:
        return TABLES[variant]
    except KeyError:
        raise InvalidRow(f"unknown table variant {variant!r}") from None


def get_row(index: int, variant: str = "corrected") -> TableRow:
    table = _table(variant)
    if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= len(table):
        raise InvalidRow(f"row must be an integer in 1..{len(table)}, got {index!r}")
    return table[index - 1]


# -- matching -------------------------------------------------------------------------


def _close(x: float, y: float, atol: float) -> bool:
    return abs(x - y) <= atol * max(1.0, abs(x), abs(y))


def match_row(row: TableRow, triple: ParamTriple, caps: EnumCaps = DEFAULT_CAPS,
              tol: Tolerances = DEFAULT_TOLERANCES) -> list[TableMatch]:
    """All integer assignments under `caps` that put `triple` on `row`."""
    target = triple.to_dict()
    partial: list[dict] = [{}]
    for name, col in row.columns:
        x = target[name]
        nxt = []
        for ctx in partial:
            if isinstance(col, Const):
                if _close(col.value(ctx), x, tol.eps_match):
                    nxt.append({**ctx, name: x})
            elif isinstance(col, Interval):
                if col.contains(x, ctx, tol.eps_match * max(1.0, abs(x))):
                    nxt.append({**ctx, name: x})
            else:
                for j in col.candidates(x, ctx, caps.cap_for(col.param)):
                    if col.param in ctx and ctx[col.param] != j:
                        continue
                    if _close(col.at(j, ctx), x, tol.eps_match):
                        nxt.append({**ctx, col.param: j, name: x})
        partial = nxt
        if not partial:
            return []
    out = []
    for ctx in partial:
        if row.extra(ctx):
            out.append(TableMatch(row.index, {p: int(ctx[p]) for p in row.params}))
    return out


def match_table(triple: ParamTriple, caps: EnumCaps = DEFAULT_CAPS,
                tol: Tolerances = DEFAULT_TOLERANCES, rows=None,
                variant: str = "corrected") -> list[TableMatch]:
    """Every row (with solved integers) that contains `triple`."""
    found = []
    for row in _table(variant) if rows is None else (get_row(i, variant) for i in rows):
        try:
            found.extend(match_row(row, triple, caps, tol))
        except (ZeroDivisionError, ValueError):
            # a closed form is singular at this point (e.g. gamma = 0)
            continue
    return found


# -- enumeration ----------------------------------------------------------------------

INTERVAL_OFFSETS = (0.0, 0.5, 2.0, 10.0)


def in_theorem_a_region(t: ParamTriple, eps: float = DEFAULT_TOLERANCES.eps) -> bool:
    """beta elliptic, beta' > 0 and 0 < gamma < -beta beta'/4, all strictly (by eps).

    For an elliptic f and a hyperbolic g these say that the axes meet at an
    angle strictly between 0 and pi/2.
    """
    bound = -t.beta * t.beta_prime / 4
    slack = eps * max(1.0, abs(bound))
    return (-4 + eps < t.beta < -eps and t.beta_prime > eps
            and slack < t.gamma < bound - slack)


def _expand(row: TableRow, caps: EnumCaps) -> Iterator[tuple[dict, dict]]:
    states: list[tuple[dict, dict]] = [({}, {})]
    for name, col in row.columns:
        nxt = []
        for ctx, offs in states:
            try:
                if isinstance(col, Const):
                    nxt.append(({**ctx, name: col.value(ctx)}, offs))
                elif isinstance(col, Interval):
                    for o, v in col.samples(ctx, INTERVAL_OFFSETS):
                        nxt.append(({**ctx, name: v}, {**offs, name: o}))
                else:
                    for j in range(col.lo, caps.cap_for(col.param) + 1):
                        if col.cond(j, ctx):
                            c2 = {**ctx, col.param: j}
                            nxt.append(({**c2, name: col.at(j, c2)}, offs))
            except ZeroDivisionError:
                continue
        states = nxt
    yield from states


def enumerate_row(index: int, caps: EnumCaps = DEFAULT_CAPS,
                  variant: str = "corrected") -> list[RowInstance]:
    """Admissible instances of a row under `caps`, sorted by integer parameters.

    Interval columns are sampled at their endpoint and a few fixed offsets.
    Instances outside the truly spatial region are dropped, and rows 21..41 keep
    only instances where f is elliptic, g hyperbolic and the axes intersect.
    """
    row = get_row(index, variant)
    out = []
    for ctx, offs in _expand(row, caps):
        if not row.extra(ctx):
            continue
        vals = (ctx["beta"], ctx["beta_prime"], ctx["gamma"])
        if not all(math.isfinite(v) for v in vals):
            continue
        t = ParamTriple(*vals)
        keep = in_theorem_a_region(t) if index in ODD_ROWS else is_truly_spatial(t)
        if keep:
            out.append(RowInstance(index, t, {p: int(ctx[p]) for p in row.params}, offs))
    out.sort(key=RowInstance.sort_key)
    return out
