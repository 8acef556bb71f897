"""Evaluation configuration shared by the series-based evaluators."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

#: Largest even Bernoulli index held in the precomputed table.
MAX_BERNOULLI_ORDER = 30


@dataclass(frozen=True)
class EvalConfig:
    """Knobs for the Euler-Maclaurin evaluators.

    em_terms is the floor on the number of leading Dirichlet-series terms;
    the actual cutoff grows with |Im s| (roughly |Im s|/2 + 10).
    bernoulli_order is the highest even Bernoulli number used in the
    correction sum; target_abs_error is the advertised absolute accuracy
    for heights |Im s| <= 1000.
    """

    em_terms: int = 20
    bernoulli_order: int = 30
    target_abs_error: float = 1e-10

    def __post_init__(self) -> None:
        if self.em_terms < 1:
            raise DomainError("em_terms must be a positive integer")
        if self.bernoulli_order < 2 or self.bernoulli_order % 2 != 0:
            raise DomainError("bernoulli_order must be a positive even integer")
        if self.bernoulli_order > MAX_BERNOULLI_ORDER:
            raise DomainError(
                f"bernoulli_order {self.bernoulli_order} exceeds the "
                f"precomputed table bound {MAX_BERNOULLI_ORDER}"
            )
        if not self.target_abs_error > 0:
            raise DomainError("target_abs_error must be positive")


DEFAULT_CONFIG = EvalConfig()
