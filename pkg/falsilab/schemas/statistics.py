"""
Coin-flip data, parameter sets and likelihood search results.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from falsilab.constants import ERROR_MESSAGES
from falsilab.exceptions import BadParameter


def _probability(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise BadParameter(ERROR_MESSAGES["probability"].format(name, value))
    return value


class CoinData(BaseModel):
    """Observed flips as a string over {H, T}."""

    model_config = ConfigDict(frozen=True)

    flips: str = ""

    @field_validator("flips")
    @classmethod
    def validate_flips(cls, v: str) -> str:
        v = v.strip().upper()
        if set(v) - {"H", "T"}:
            raise BadParameter(f"Coin flips may only contain H and T, got '{v}'")
        return v

    @property
    def n(self) -> int:
        return len(self.flips)

    @property
    def heads(self) -> int:
        return self.flips.count("H")


class FiniteParameterSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: Tuple[float, ...]

    @field_validator("points")
    @classmethod
    def validate_points(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        return tuple(sorted({_probability("theta", p) for p in v}))


class IntervalParameterSet(BaseModel):
    """[lo, hi] minus finitely many excluded points, searched on a grid of the given step."""

    model_config = ConfigDict(frozen=True)

    lo: float = 0.0
    hi: float = 1.0
    excluded: Tuple[float, ...] = ()
    step: float = Field(default=1e-4)

    @model_validator(mode="after")
    def validate_bounds(self) -> "IntervalParameterSet":
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise BadParameter(ERROR_MESSAGES["interval_bounds"].format(self.lo, self.hi))
        if not self.step > 0:
            raise BadParameter(ERROR_MESSAGES["grid_step"].format(self.step))
        for point in self.excluded:
            _probability("excluded point", point)
        return self


class MLEResult(BaseModel):
    """Maximum-likelihood search outcome; grid fields are None for finite sets."""

    model_config = ConfigDict(frozen=True)

    supremum: float
    attained: bool
    argmax: Optional[List[float]] = None
    grid_supremum: Optional[float] = None
    grid_infimum: Optional[float] = None
    analytic_maximizer: Optional[float] = None
    analytic_excluded: bool = False
    grid_max_adjacent_to_exclusion: bool = False
