"""Quantum-noise bookkeeping for the loss budget.

Variances are linear and relative to shot noise (1.0 = shot-noise limit);
optical loss is the beam-splitter vacuum admixture ``V' = t*V + (1 - t)``
for power transmission ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

__all__ = [
    "SqueezingState",
    "BudgetRow",
    "BudgetReport",
    "db_to_variance",
    "variance_to_db",
    "apply_loss",
    "budget",
    "loss_for_target",
]


def db_to_variance(db: float) -> float:
    """Noise variance (relative to shot noise) from a dB figure."""
    return 10.0 ** (db / 10.0)


def variance_to_db(variance: float) -> float:
    """dB figure from a relative noise variance."""
    if variance <= 0.0:
        raise ValueError(f"variance must be positive, got {variance}")
    import math

    return 10.0 * math.log10(variance)


@dataclass(frozen=True)
class SqueezingState:
    """Amplitude-quadrature noise variance relative to shot noise."""

    variance: float
    uncertainty_db: float | None = None

    def __post_init__(self):
        if self.variance <= 0.0:
            raise ValueError(f"variance must be positive, got {self.variance}")

    @classmethod
    def from_db(cls, db: float, uncertainty_db: float | None = None) -> "SqueezingState":
        return cls(db_to_variance(db), uncertainty_db)

    @property
    def db(self) -> float:
        return variance_to_db(self.variance)

    @property
    def squeezed(self) -> bool:
        return self.variance < 1.0

    def db_interval(self) -> tuple[float, float] | None:
        """First-order dB interval from the carried measurement uncertainty."""
        if self.uncertainty_db is None:
            return None
        return (self.db - self.uncertainty_db, self.db + self.uncertainty_db)


def apply_loss(s: SqueezingState, transmission: float) -> SqueezingState:
    """Mix in vacuum through a beam splitter of the given power transmission."""
    if not 0.0 <= transmission <= 1.0:
        raise ValueError(f"transmission must be in [0, 1], got {transmission}")
    return replace(s, variance=transmission * s.variance + (1.0 - transmission))


@dataclass(frozen=True)
class BudgetRow:
    stage: int
    transmission: float
    cumulative_transmission: float
    db: float


@dataclass(frozen=True)
class BudgetReport:
    input_db: float
    rows: tuple[BudgetRow, ...]
    final: SqueezingState

    @property
    def final_db(self) -> float:
        return self.final.db


def budget(input_db: float, transmissions: list[float],
           uncertainty_db: float | None = None) -> BudgetReport:
    """Sequential loss budget; equivalent to one loss with the product of
    the stage transmissions."""
    state = SqueezingState.from_db(input_db, uncertainty_db)
    rows = []
    cumulative = 1.0
    for k, t in enumerate(transmissions, start=1):
        state = apply_loss(state, t)
        cumulative *= t
        rows.append(BudgetRow(stage=k, transmission=t,
                              cumulative_transmission=cumulative, db=state.db))
    return BudgetReport(input_db=input_db, rows=tuple(rows), final=state)


def loss_for_target(input_db: float, output_db: float) -> float:
    """Transmission that degrades ``input_db`` of squeezing to ``output_db``.

    Solves ``V_out = t*V_in + (1 - t)`` for ``t``; valid only when both
    variances sit on the same side of shot noise and the loss model can
    reach the target (``t`` in [0, 1]).
    """
    v_in = db_to_variance(input_db)
    v_out = db_to_variance(output_db)
    if v_in == 1.0:
        if v_out == 1.0:
            return 1.0
        raise ValueError("shot-noise input cannot change under loss")
    t = (v_out - 1.0) / (v_in - 1.0)
    if not 0.0 <= t <= 1.0:
        raise ValueError(
            f"no physical transmission maps {input_db} dB to {output_db} dB "
            f"(would need t={t:.4g})"
        )
    return t
