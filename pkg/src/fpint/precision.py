"""Precision configuration shared by every series and quadrature routine."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_REL_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000

# Number of consecutive sub-tolerance terms required before a series is
# declared converged (oscillating series can produce a single accidental
# small term).
CONSECUTIVE_SMALL_TERMS = 3


@dataclass(frozen=True)
class PrecisionConfig:
    """Tolerances for series summation.

    rel_tol     -- relative tolerance for truncation decisions (> 0)
    max_terms   -- hard cap on summed terms (>= 32)
    working     -- working-precision descriptor; binary64 is the only
                   precision this implementation computes in
    """

    rel_tol: float = DEFAULT_REL_TOL
    max_terms: int = DEFAULT_MAX_TERMS
    working: str = "binary64"

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 32:
            raise ValueError("max_terms must be at least 32")

    def with_overrides(self, rel_tol: float | None = None,
                       max_terms: int | None = None) -> "PrecisionConfig":
        return PrecisionConfig(
            rel_tol=self.rel_tol if rel_tol is None else rel_tol,
            max_terms=self.max_terms if max_terms is None else max_terms,
            working=self.working,
        )


def default_precision() -> PrecisionConfig:
    """Default config; FPINT_PRECISION overrides rel_tol when set."""
    env = os.environ.get("FPINT_PRECISION")
    if env:
        try:
            rel = float(env)
        except ValueError as exc:
            raise ValueError(f"FPINT_PRECISION is not a float: {env!r}") from exc
        return PrecisionConfig(rel_tol=rel)
    return PrecisionConfig()
