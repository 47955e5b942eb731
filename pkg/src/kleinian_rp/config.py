"""Numerical tolerances and enumeration caps shared by every module."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

CONFIG_ENV_VAR = "KLEINIAN_RP_CONFIG"


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used for classification, branch selection and matching.

    Attributes
    ----------
    eps : float
        Classification tolerance on traces, angles and parameters.
    eps_det : float
        Allowed drift of a determinant away from 1.
    eps_axis : float
        Tolerance on the distance between axes when deciding that two axes meet.
        Looser than `eps` because it compounds two root-findings.
    eps_match : float
        Tolerance when matching a triple against a closed form of the row table.
    max_denominator : int
        Largest denominator accepted by rational angle recognition.
    renorm_period : int
        Number of products after which a matrix is rescaled to determinant 1.
    """

    eps: float = 1e-9
    eps_det: float = 1e-12
    eps_axis: float = 1e-7
    eps_match: float = 1e-8
    max_denominator: int = 1000
    renorm_period: int = 8

    def __post_init__(self):
        for name in ("eps", "eps_det", "eps_axis", "eps_match"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name} must be positive")
        if self.max_denominator < 10:
            raise ValueError("max_denominator must be at least 10")
        if self.renorm_period < 1:
            raise ValueError("renorm_period must be at least 1")


@dataclass(frozen=True)
class EnumCaps:
    """Upper bounds on the integer parameters of the table families."""

    n: int = 200
    m: int = 200
    p: int = 200
    k: int = 200

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 2:
                raise ValueError(f"cap {f.name} must be at least 2")

    @classmethod
    def uniform(cls, cap: int) -> "EnumCaps":
        return cls(n=cap, m=cap, p=cap, k=cap)

    def cap_for(self, param: str) -> int:
        # every family parameter of the table is bounded by one of the four caps
        return getattr(self, param if param in ("n", "m", "p", "k") else "p")


DEFAULT_TOLERANCES = Tolerances()
DEFAULT_CAPS = EnumCaps()


@dataclass(frozen=True)
class Settings:
    tolerances: Tolerances = DEFAULT_TOLERANCES
    caps: EnumCaps = DEFAULT_CAPS
    output: str = "human"

    def to_dict(self) -> dict:
        return {"tolerances": asdict(self.tolerances), "caps": asdict(self.caps),
                "output": self.output}


def load_settings(path: str | os.PathLike | None = None, overrides: dict | None = None) -> Settings:
    """Build settings from a JSON file, then apply flat overrides.

    The file (or the one named by ``KLEINIAN_RP_CONFIG`` when `path` is None)
    may hold ``tolerances``, ``caps`` and ``output`` keys. Keys of `overrides`
    are matched against the field names of `Tolerances` and `EnumCaps`;
    ``None`` values are ignored.
    """
    data: dict = {}
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is not None:
        data = json.loads(Path(path).read_text())
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
    unknown = set(data) - {"tolerances", "caps", "output"}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")

    tol = Tolerances(**data.get("tolerances", {}))
    caps = EnumCaps(**data.get("caps", {}))
    output = data.get("output", "human")

    tol_names = {f.name for f in fields(Tolerances)}
    cap_names = {f.name for f in fields(EnumCaps)}
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key in tol_names:
            tol = replace(tol, **{key: value})
        elif key in cap_names:
            caps = replace(caps, **{key: value})
        elif key == "output":
            output = value
        else:
            raise ValueError(f"unknown setting {key!r}")
    if output not in ("human", "json", "jsonl"):
        raise ValueError(f"unknown output mode {output!r}")
    return Settings(tol, caps, output)
