"""Run configuration and environment overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_MAX_Q = 2**20
DEFAULT_SEED = 20240601


def max_field_size() -> int:
    """Largest field order accepted, honouring ``EQUICURVE_MAX_Q``."""
    raw = os.environ.get("EQUICURVE_MAX_Q")
    if raw:
        value = int(raw)
        if value <= 1:
            raise ValueError("EQUICURVE_MAX_Q must be > 1")
        return value
    return DEFAULT_MAX_Q


def default_seed() -> int:
    raw = os.environ.get("EQUICURVE_SEED")
    return int(raw) if raw else DEFAULT_SEED


@dataclass(frozen=True)
class RunConfig:
    curve: str | None = None
    profile: str | None = None
    divisor: str | None = None
    max_extension: int = 6
    series_cap_factor: int = 16
    rr_degree_factor: int = 8
    max_codewords: int = 2**22
    output: str = "json"
    seed: int = field(default_factory=default_seed)

    def __post_init__(self):
        for name in ("max_extension", "series_cap_factor", "rr_degree_factor", "max_codewords"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output not in ("json", "table"):
            raise ValueError(f"unknown output format {self.output!r}")
