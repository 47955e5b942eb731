"""PSL(2,C) arithmetic: matrices, trace parameters, element classes and roots.

Matrices are stored as four Python complex numbers; for 2x2 products this is
several times faster than numpy and keeps values hashable and immutable.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Sequence

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    ConstructionFailure,
    DegenerateSquareRoot,
    NonUnitDeterminant,
    NotElliptic,
    NotNonPrimitiveElliptic,
    NotRealParameters,
    ZeroGamma,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class MoebiusMap:
    """A determinant-one complex 2x2 matrix, read projectively (M ~ -M).

    ``age`` counts products since the last rescaling to determinant one; it is
    bookkeeping only and takes no part in equality.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    age: int = field(default=0, compare=False, repr=False)

    @classmethod
    def from_entries(cls, a, b, c, d) -> "MoebiusMap":
        """Build a map from arbitrary entries, rescaling to determinant one."""
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        if abs(det) < 1e-300:
            raise NonUnitDeterminant("singular matrix")
        r = cmath.sqrt(det)
        return cls(a / r, b / r, c / r, d / r)

    @classmethod
    def from_array(cls, arr) -> "MoebiusMap":
        arr = np.asarray(arr, dtype=complex)
        return cls.from_entries(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    @classmethod
    def diagonal(cls, lam) -> "MoebiusMap":
        lam = complex(lam)
        return cls(lam, 0j, 0j, 1 / lam)

    # -- algebra -----------------------------------------------------------

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        a, b, c, d = self.a, self.b, self.c, self.d
        p, q, r, s = other.a, other.b, other.c, other.d
        prod = MoebiusMap(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s,
                          self.age + other.age + 1)
        if prod.age >= DEFAULT_TOLERANCES.renorm_period:
            return prod.renormalized()
        return prod

    def mul(self, other: "MoebiusMap", period: int) -> "MoebiusMap":
        """Product with an explicit renormalization period."""
        a, b, c, d = self.a, self.b, self.c, self.d
        p, q, r, s = other.a, other.b, other.c, other.d
        prod = MoebiusMap(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s,
                          self.age + other.age + 1)
        return prod.renormalized() if prod.age >= period else prod

    def __neg__(self) -> "MoebiusMap":
        return MoebiusMap(-self.a, -self.b, -self.c, -self.d, self.age)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a, self.age)

    def __pow__(self, k: int) -> "MoebiusMap":
        if k < 0:
            return self.inverse() ** (-k)
        result = MoebiusMap.identity()
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def renormalized(self) -> "MoebiusMap":
        r = cmath.sqrt(self.det)
        return MoebiusMap(self.a / r, self.b / r, self.c / r, self.d / r)

    def conjugate_by(self, w: "MoebiusMap") -> "MoebiusMap":
        """Return w * self * w^-1."""
        return w @ self @ w.inverse()

    # -- invariants ----------------------------------------------------------

    @property
    def trace(self) -> complex:
        return self.a + self.d

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def beta(self) -> complex:
        """tr^2 - 4, computed as (tr - 2)(tr + 2) for accuracy near +-2."""
        t = self.trace
        return (t - 2) * (t + 2)

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def norm(self) -> float:
        return max(abs(x) for x in self.entries)

    def proj_distance(self, other: "MoebiusMap") -> float:
        """min(|M - N|_inf, |M + N|_inf) over the entries."""
        plus = max(abs(x - y) for x, y in zip(self.entries, other.entries))
        minus = max(abs(x + y) for x, y in zip(self.entries, other.entries))
        return min(plus, minus)

    def proj_equal(self, other: "MoebiusMap", eps: float = DEFAULT_TOLERANCES.eps) -> bool:
        return self.proj_distance(other) <= eps

    def is_identity(self, eps: float = DEFAULT_TOLERANCES.eps) -> bool:
        return self.proj_distance(MoebiusMap.identity()) <= eps

    def check_unimodular(self, eps_det: float = DEFAULT_TOLERANCES.eps_det) -> None:
        if abs(self.det - 1) > eps_det:
            raise NonUnitDeterminant(f"|det - 1| = {abs(self.det - 1):.3g}")

    def apply(self, z):
        """Act on a point of the Riemann sphere (``math.inf`` is infinity)."""
        if z == math.inf:
            return self.a / self.c if self.c != 0 else math.inf
        den = self.c * z + self.d
        if den == 0:
            return math.inf
        return (self.a * z + self.b) / den

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[list[float]]:
        return [[x.real, x.imag] for x in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[float]]) -> "MoebiusMap":
        if len(data) != 4:
            raise ValueError("a matrix is four [re, im] pairs")
        return cls.from_entries(*(complex(re, im) for re, im in data))


def commutator(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    return f @ g @ f.inverse() @ g.inverse()


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_word(word: str) -> list[tuple[str, int]]:
    """Parse ``"f^3 g f g^-1"`` into ``[("f", 3), ("g", 1), ...]``."""
    out = []
    for tok in word.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def evaluate_word(word: str | Sequence[tuple[str, int]], gens: Mapping[str, MoebiusMap],
                  period: int | None = None) -> MoebiusMap:
    """Multiply out a word in the named generators, left to right."""
    letters = parse_word(word) if isinstance(word, str) else word
    period = period or DEFAULT_TOLERANCES.renorm_period
    result = MoebiusMap.identity()
    for name, exp in letters:
        base = gens[name] if exp > 0 else gens[name].inverse()
        for _ in range(abs(exp)):
            result = result.mul(base, period)
    return result


# -- parameters ---------------------------------------------------------------


@dataclass(frozen=True)
class ParamTriple:
    """(beta, beta_prime, gamma) = (tr^2 f - 4, tr^2 g - 4, tr[f,g] - 2)."""

    beta: float
    beta_prime: float
    gamma: float

    def __post_init__(self):
        for name in ("beta", "beta_prime", "gamma"):
            v = getattr(self, name)
            if isinstance(v, complex) or not math.isfinite(v):
                raise NotRealParameters(f"{name} = {v!r} is not a finite real")
            object.__setattr__(self, name, float(v))

    def __iter__(self) -> Iterator[float]:
        return iter((self.beta, self.beta_prime, self.gamma))

    def swapped(self) -> "ParamTriple":
        return ParamTriple(self.beta_prime, self.beta, self.gamma)

    def to_dict(self) -> dict:
        return {"beta": self.beta, "beta_prime": self.beta_prime, "gamma": self.gamma}

    @classmethod
    def from_dict(cls, data: Mapping) -> "ParamTriple":
        return cls(data["beta"], data["beta_prime"], data["gamma"])


def _real_part(x: complex, name: str, eps: float) -> float:
    if abs(x.imag) > eps * max(1.0, abs(x.real)):
        raise NotRealParameters(f"{name} has imaginary part {x.imag:.3g}")
    return x.real


def params_of(f: MoebiusMap, g: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> ParamTriple:
    f.check_unimodular(tol.eps_det)
    g.check_unimodular(tol.eps_det)
    gamma = commutator(f, g).trace - 2
    return ParamTriple(_real_part(f.beta, "beta", tol.eps),
                       _real_part(g.beta, "beta_prime", tol.eps),
                       _real_part(gamma, "gamma", tol.eps))


# -- classification -------------------------------------------------------------


class Kind(str, Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    PI_LOXODROMIC = "pi_loxodromic"
    STRICTLY_LOXODROMIC = "strictly_loxodromic"


@dataclass(frozen=True)
class ElementClass:
    """Conjugacy-invariant description of one element.

    For elliptic elements ``rotation_angle`` lies in (0, pi] (the trace cannot
    see orientation) and ``rotation`` is that angle as a fraction q/n of a full
    turn when it is rational with denominator at most ``max_denominator``.
    """

    kind: Kind
    beta: complex
    rotation_angle: float | None = None
    rotation: Fraction | None = None

    @property
    def order(self) -> int | None:
        return self.rotation.denominator if self.rotation is not None else None

    @property
    def primitive(self) -> bool | None:
        return self.rotation.numerator == 1 if self.rotation is not None else None

    @property
    def is_elliptic(self) -> bool:
        return self.kind is Kind.ELLIPTIC

    def is_primitive_elliptic(self, order: int | None = None) -> bool:
        return (self.kind is Kind.ELLIPTIC and bool(self.primitive)
                and (order is None or self.order == order))

    def pi_over(self) -> Fraction | None:
        """x with rotation_angle = pi/x, if x is rational (denominator <= Q)."""
        if self.rotation is None:
            return None
        return 1 / (2 * self.rotation)

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "beta": self.beta.real if self.beta.imag == 0 else
               [self.beta.real, self.beta.imag]}
        if self.kind is Kind.ELLIPTIC:
            out["rotation_angle"] = self.rotation_angle
            out["order"] = self.order
            out["primitive"] = self.primitive
        return out


def recognize_fraction(x: float, max_denominator: int, atol: float) -> Fraction | None:
    """Rational q/n within `atol` of x with n <= max_denominator, else None."""
    r = Fraction(x).limit_denominator(max_denominator)
    return r if abs(float(r) - x) <= atol else None


def rotation_angle(M: MoebiusMap) -> float:
    """Rotation angle in [0, pi] of an elliptic element (from its trace)."""
    t = abs(M.trace.real)
    s = math.sqrt(max(-M.beta.real, 0.0))
    return 2.0 * math.atan2(s, t)


def classify_element(M: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> ElementClass:
    M.check_unimodular(max(tol.eps_det, tol.eps_det * M.norm() ** 2))
    beta = M.beta
    if M.is_identity(tol.eps):
        return ElementClass(Kind.IDENTITY, beta)
    scale = max(1.0, abs(beta))
    if abs(beta.imag) > tol.eps * scale:
        return ElementClass(Kind.STRICTLY_LOXODROMIC, beta)
    b = beta.real
    if abs(b) <= tol.eps:
        return ElementClass(Kind.PARABOLIC, beta)
    if b > 0:
        return ElementClass(Kind.HYPERBOLIC, beta)
    if b < -4 - tol.eps:
        return ElementClass(Kind.PI_LOXODROMIC, beta)
    theta = rotation_angle(M)
    frac = recognize_fraction(theta / TWO_PI, tol.max_denominator, tol.eps / TWO_PI)
    return ElementClass(Kind.ELLIPTIC, beta, theta, frac)


def classify_beta(beta: float, tol: Tolerances = DEFAULT_TOLERANCES) -> Kind:
    """Element kind from a real beta alone."""
    if abs(beta) <= tol.eps:
        return Kind.PARABOLIC
    if beta > 0:
        return Kind.HYPERBOLIC
    if beta >= -4 - tol.eps:
        return Kind.ELLIPTIC
    return Kind.PI_LOXODROMIC


def elliptic_rotation_of_beta(beta: float, tol: Tolerances = DEFAULT_TOLERANCES) -> Fraction | None:
    """q/n with beta = -4 sin^2(q pi / n), 0 < q/n <= 1/2, or None."""
    if not (-4 - tol.eps <= beta < -tol.eps):
        return None
    half = math.atan2(math.sqrt(-beta), math.sqrt(max(beta + 4, 0.0)))
    return recognize_fraction(half / math.pi, tol.max_denominator, tol.eps / math.pi)


# -- roots ----------------------------------------------------------------------


def sqrt_in_psl(M: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[MoebiusMap, ...]:
    """The distinct square roots of M in PSL(2,C).

    In SL(2,C) a root S of M satisfies S = (M + I)/tr S with tr^2 S = tr M + 2,
    and a root of -M is (I - M)/sqrt(2 - tr M). Both are roots of M in PSL.
    A branch whose denominator vanishes (M parabolic or the identity) is omitted.
    """
    t = M.trace
    roots = []
    for sign in (1, -1):
        q2 = sign * t + 2
        if abs(q2) <= tol.eps:
            continue
        q = cmath.sqrt(q2)
        S = MoebiusMap((sign * M.a + 1) / q, sign * M.b / q, sign * M.c / q, (sign * M.d + 1) / q)
        # cancellation in M +- I near a parabolic leaves a singular matrix
        if abs(S.det - 1) > math.sqrt(tol.eps):
            continue
        roots.append(S.renormalized())
    if not roots:
        raise DegenerateSquareRoot("no square root branch is defined")
    return tuple(roots)


def fixed_vectors(M: MoebiusMap) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Unit eigenvectors of M, i.e. fixed points in homogeneous coordinates.

    The first vector belongs to the eigenvalue (tr + sqrt(tr^2 - 4))/2.
    """
    a, b, c, d = M.entries
    t = a + d
    r = cmath.sqrt(M.beta)
    out = []
    for lam in ((t + r) / 2, (t - r) / 2):
        v1 = (b, lam - a)
        v2 = (lam - d, c)
        n1 = math.hypot(abs(v1[0]), abs(v1[1]))
        n2 = math.hypot(abs(v2[0]), abs(v2[1]))
        v, n = (v1, n1) if n1 >= n2 else (v2, n2)
        if n == 0:
            # M is +-I up to rounding; any basis works
            v, n = ((1 + 0j, 0j), 1.0) if not out else ((0j, 1 + 0j), 1.0)
        out.append((v[0] / n, v[1] / n))
    return out[0], out[1]


def _from_eigen(v1, v2, mu: complex) -> MoebiusMap:
    # P diag(mu, 1/mu) P^-1 with P = [v1 v2]
    p, r = v1
    q, s = v2
    det = p * s - q * r
    inv_mu = 1 / mu
    a = (p * mu * s - q * inv_mu * r) / det
    b = (-p * mu * q + q * inv_mu * p) / det
    c = (r * mu * s - s * inv_mu * r) / det
    d = (-r * mu * q + s * inv_mu * p) / det
    return MoebiusMap(a, b, c, d).renormalized()


def rotation_angle_on(R: MoebiusMap, v: tuple[complex, complex]) -> float:
    """Signed rotation angle in [0, 2pi) of R about an axis with endpoint v.

    The angle is twice the argument of R's eigenvalue on v; the sign ambiguity
    of PSL changes it by 2pi and so disappears mod 2pi.
    """
    x, y = v
    if abs(x) >= abs(y):
        mu = (R.a * x + R.b * y) / x
    else:
        mu = (R.c * x + R.d * y) / y
    return (2 * cmath.phase(mu)) % TWO_PI


def elliptic_kth_roots(M: MoebiusMap, k: int, tol: Tolerances = DEFAULT_TOLERANCES) -> list[MoebiusMap]:
    """The k elliptic k-th roots of M sharing its axis.

    If M rotates through theta about its axis, root j rotates through
    (theta + 2 pi j)/k, j = 0..k-1, measured with the same orientation.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if classify_element(M, tol).kind is not Kind.ELLIPTIC:
        raise NotElliptic("k-th roots are defined here only for elliptic elements")
    v1, v2 = fixed_vectors(M)
    theta = rotation_angle_on(M, v1)
    return [_from_eigen(v1, v2, cmath.exp(0.5j * (theta + TWO_PI * j) / k)) for j in range(k)]


def primitive_power(M: MoebiusMap, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[MoebiusMap, int]:
    """Return (M^r, r) with M^r a primitive rotation generating the same cyclic group."""
    cls = classify_element(M, tol)
    if cls.kind is not Kind.ELLIPTIC or cls.rotation is None:
        raise NotElliptic("need an elliptic element of finite order")
    q, n = cls.rotation.numerator, cls.rotation.denominator
    r = pow(q, -1, n) if n > 1 else 1
    return M ** r, r


def normalize_primitive(triple: ParamTriple, q: int, n: int,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> ParamTriple:
    """Replace a non-primitive elliptic f (beta = -4 sin^2(q pi/n)) by its primitive power.

    The new triple describes the same group: beta -> -4 sin^2(pi/n) and gamma is
    scaled by the same factor.
    """
    if n < 2 or q < 1 or gcd(q, n) != 1 or (q > 1 and not 2 * q < n):
        raise NotNonPrimitiveElliptic(f"q/n = {q}/{n} is not reduced with 1 <= q < n/2")
    expected = -4 * math.sin(q * math.pi / n) ** 2
    if abs(triple.beta - expected) > tol.eps * max(1.0, abs(expected)):
        raise NotNonPrimitiveElliptic(f"beta = {triple.beta} is not -4 sin^2({q} pi/{n})")
    if q == 1:
        return triple
    new_beta = -4 * math.sin(math.pi / n) ** 2
    return ParamTriple(new_beta, triple.beta_prime, triple.gamma * new_beta / triple.beta)


# -- normalized generators ----------------------------------------------------------


@dataclass(frozen=True)
class GeneratorPair:
    """Normalized generators f = [[s,1],[0,1/s]], g = [[t,0],[c,1/t]].

    ``c_other`` is the second root of the quadratic for c; it describes a pair
    conjugate to (f, g^-1).
    """

    f: MoebiusMap
    g: MoebiusMap
    c: complex
    c_other: complex

    def __iter__(self):
        return iter((self.f, self.g))


def _lift_parameter(trace: complex) -> complex:
    # s with s + 1/s = trace
    return (trace + cmath.sqrt(trace * trace - 4)) / 2


def construct_generators(triple: ParamTriple, tol: Tolerances = DEFAULT_TOLERANCES,
                         use_other_root: bool = False) -> GeneratorPair:
    """A generator pair realizing `triple`; unique up to conjugacy when gamma != 0."""
    beta, beta_p, gamma = triple
    if abs(gamma) <= tol.eps:
        raise ZeroGamma("gamma = 0: the generators share a fixed point")
    s = _lift_parameter(cmath.sqrt(beta + 4))
    t = _lift_parameter(cmath.sqrt(beta_p + 4))
    k = (s - 1 / s) * (t - 1 / t)
    disc = cmath.sqrt(k * k + 4 * gamma)
    roots = sorted([(-k + disc) / 2, (-k - disc) / 2], key=lambda z: -abs(z))
    c, c_other = (roots[1], roots[0]) if use_other_root else (roots[0], roots[1])
    f = MoebiusMap(complex(s), 1 + 0j, 0j, 1 / s)
    g = MoebiusMap(complex(t), 0j, complex(c), 1 / t)
    got = params_of(f, g, replace(tol, eps=1e-6))
    for want, have in zip(triple, got):
        if abs(want - have) > 1e-9 * max(1.0, abs(want)):
            raise ConstructionFailure(f"round trip failed: {tuple(triple)} -> {tuple(got)}")
    return GeneratorPair(f, g, complex(c), complex(c_other))
