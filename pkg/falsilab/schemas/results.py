"""
Result models for dimension, surprise and selector computations.
"""

from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from falsilab.core.model import PartialAssignment, SamplePrefix


class VCResult(BaseModel):
    """VC dimension with a lexicographically smallest shattered witness."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0)
    witness: Tuple[int, ...]


class PopperResult(BaseModel):
    """delta_P(H, f): a minimal unshattered witness, or none within the ground."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["finite", "unwitnessed"]
    value: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def validate_kind(self) -> "PopperResult":
        if self.kind == "finite" and (self.value is None or self.witness is None or len(self.witness) != self.value):
            raise ValueError("Finite Popper results carry a witness of size value")
        if self.kind == "unwitnessed" and (self.value is not None or self.witness is not None):
            raise ValueError("Unwitnessed Popper results carry no value")
        return self

    @classmethod
    def finite(cls, witness: Tuple[int, ...]) -> "PopperResult":
        return cls(kind="finite", value=len(witness), witness=tuple(witness))

    @classmethod
    def unwitnessed(cls) -> "PopperResult":
        return cls(kind="unwitnessed")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        if not self.is_finite:
            return "unwitnessed (no unshattered subset within ground set)"
        return f"{self.value} witness={{{','.join(map(str, self.witness))}}}"


class GrowthTable(BaseModel):
    """tau_H(m) for m = 0..M with a witness subset per m."""

    model_config = ConfigDict(frozen=True)

    entries: Dict[int, int]
    witnesses: Dict[int, Tuple[int, ...]]

    def __getitem__(self, m: int) -> int:
        return self.entries[m]

    @property
    def max_m(self) -> int:
        return max(self.entries)


class ProfileEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    assignment: PartialAssignment
    result: PopperResult


class PopperProfile(BaseModel):
    """delta_P for every partial assignment up to a domain size, with a summary."""

    model_config = ConfigDict(frozen=True)

    depth: int
    entries: List[ProfileEntry]

    def as_dict(self) -> Dict[PartialAssignment, PopperResult]:
        return {entry.assignment: entry.result for entry in self.entries}

    @property
    def max_finite(self) -> Optional[int]:
        values = [entry.result.value for entry in self.entries if entry.result.is_finite]
        return max(values) if values else None

    @property
    def unwitnessed(self) -> List[PartialAssignment]:
        return [entry.assignment for entry in self.entries if not entry.result.is_finite]

    @property
    def hereditarily_finite(self) -> bool:
        """Every profiled assignment has a finite Popper dimension."""
        return not self.unwitnessed


class SevereVerdict(BaseModel):
    """Severe-surprise verdict with each conjunct reported separately."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    epsilon: Fraction
    observed: str
    observed_compatible: bool
    exceeds_threshold: bool
    dominates_complement: bool
    surprise: Fraction
    complement_surprise: Fraction

    @computed_field
    @property
    def passed(self) -> bool:
        return self.observed_compatible and self.exceeds_threshold and self.dominates_complement


class SurpriseReport(BaseModel):
    """Exact mu, S and S^co at one prefix length."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=0)
    mu: Fraction
    surprise: Fraction
    co_surprise: Fraction
    crucial_experiment: bool
    severe: Optional[SevereVerdict] = None

    @model_validator(mode="after")
    def validate_consistency(self) -> "SurpriseReport":
        if self.surprise != 1 - self.mu or not 0 <= self.surprise <= 1:
            raise ValueError("surprise must equal 1 - mu and lie in [0, 1]")
        if self.crucial_experiment != (self.surprise > 0):
            raise ValueError("a crucial experiment exists exactly when surprise is positive")
        return self


class SelectorStage(BaseModel):
    model_config = ConfigDict(frozen=True)

    witness: Tuple[int, ...]
    popper_value: int
    # Outcome on the witness assumed when planning later stages
    assumed_outcome: str


class SelectorPlan(BaseModel):
    """Falsifying selector: stages of minimal unshattered witnesses and their flattened order."""

    model_config = ConfigDict(frozen=True)

    seed: PartialAssignment
    stages: List[SelectorStage]
    flattened_order: SamplePrefix
    final_assignment: PartialAssignment
