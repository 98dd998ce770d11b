"""
Domain types: ground sets, hypothesis classes, partial assignments, samples and trace sets.
"""

from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import get_settings
from falsilab.constants import ERROR_MESSAGES
from falsilab.core.bitset import as_trace_array, from_string, to_string
from falsilab.exceptions import (BadDescriptor, BadPattern, BadPrefix, InvalidAssignment,
                                 InvalidSubset)


class GroundSet(BaseModel):
    """Finite truncation {0, ..., size-1} of the observation set, optionally labelled."""

    model_config = ConfigDict(frozen=True)

    size: int
    labels: Optional[Tuple[str, ...]] = None

    @field_validator("size")
    @classmethod
    def validate_size(cls, v: int) -> int:
        limit = get_settings().max_ground
        if not 1 <= v <= limit:
            raise BadDescriptor(ERROR_MESSAGES["ground_size"].format(limit, v))
        return v

    @model_validator(mode="after")
    def validate_labels(self) -> "GroundSet":
        if self.labels is not None and (len(self.labels) != self.size or len(set(self.labels)) != self.size):
            raise BadDescriptor(ERROR_MESSAGES["ground_labels"].format(self.size))
        return self

    @property
    def elements(self) -> range:
        return range(self.size)

    def label(self, element: int) -> str:
        return self.labels[element] if self.labels is not None else str(element)

    def check_subset(self, subset: Iterable[int]) -> Tuple[int, ...]:
        """Validate an ordered element list against this ground; returns it as a tuple."""
        subset = tuple(subset)
        for element in subset:
            if not 0 <= element < self.size:
                raise InvalidSubset(ERROR_MESSAGES["subset_range"].format(element, self.size))
        if len(set(subset)) != len(subset):
            raise InvalidSubset(ERROR_MESSAGES["subset_duplicates"].format(list(subset)))
        return subset


class PartialAssignment(BaseModel):
    """Finite partial function element -> bit, kept sorted by element."""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[int, int], ...] = ()

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        indices = [index for index, _ in v]
        if len(set(indices)) != len(indices):
            raise InvalidAssignment(ERROR_MESSAGES["assignment_duplicates"].format(sorted(indices)))
        for index, bit in v:
            if index < 0:
                raise InvalidAssignment(ERROR_MESSAGES["assignment_range"].format(index, "unknown"))
            if bit not in (0, 1):
                raise InvalidAssignment(ERROR_MESSAGES["assignment_bit"].format(index, bit))
        return tuple(sorted(v))

    @classmethod
    def of(cls, mapping: Optional[Mapping[int, int]] = None) -> "PartialAssignment":
        return cls(entries=tuple((mapping or {}).items()))

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(index for index, _ in self.entries)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def extend(self, other: Mapping[int, int]) -> "PartialAssignment":
        """Return this assignment with further entries; overlapping indices are rejected."""
        return PartialAssignment(entries=self.entries + tuple(other.items()))

    def is_subassignment_of(self, other: "PartialAssignment") -> bool:
        return set(self.entries) <= set(other.entries)

    def check(self, ground: GroundSet) -> "PartialAssignment":
        for index, _ in self.entries:
            if index >= ground.size:
                raise InvalidAssignment(ERROR_MESSAGES["assignment_range"].format(index, ground.size))
        return self

    def masks(self) -> Tuple[int, int]:
        """(domain mask, value mask) for filtering traces."""
        domain = 0
        values = 0
        for index, bit in self.entries:
            domain |= 1 << index
            values |= bit << index
        return domain, values

    def __str__(self) -> str:
        return "{" + ",".join(f"{index}={bit}" for index, bit in self.entries) + "}"


class SamplePrefix(BaseModel):
    """Finite prefix of an injective sample (or selector) f: omega -> X."""

    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...] = ()

    @field_validator("order")
    @classmethod
    def validate_order(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        seen = set()
        for element in v:
            if element < 0:
                raise BadPrefix(ERROR_MESSAGES["prefix_range"].format(element, "unknown"))
            if element in seen:
                raise BadPrefix(ERROR_MESSAGES["prefix_injective"].format(element))
            seen.add(element)
        return v

    def __len__(self) -> int:
        return len(self.order)

    def check(self, ground: GroundSet) -> "SamplePrefix":
        for element in self.order:
            if element >= ground.size:
                raise BadPrefix(ERROR_MESSAGES["prefix_range"].format(element, ground.size))
        return self

    def window(self, n: int) -> Tuple[int, ...]:
        """f([n]) in sample order."""
        if not 0 <= n <= len(self.order):
            raise BadPrefix(ERROR_MESSAGES["prefix_length"].format(n, len(self.order)))
        return self.order[:n]

    def is_full(self, ground: GroundSet) -> bool:
        return len(self.order) == ground.size


class TraceSet(BaseModel):
    """Restriction H|Y: the distinct patterns H realizes on an ordered domain."""

    model_config = ConfigDict(frozen=True)

    domain: Tuple[int, ...]
    patterns: FrozenSet[int] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def validate_patterns(self) -> "TraceSet":
        limit = 1 << len(self.domain)
        for pattern in self.patterns:
            if not 0 <= pattern < limit:
                raise BadPattern(ERROR_MESSAGES["pattern_width"].format(pattern, len(self.domain)))
        return self

    def __len__(self) -> int:
        return len(self.patterns)

    @property
    def is_full(self) -> bool:
        return len(self.patterns) == 1 << len(self.domain)

    def strings(self) -> List[str]:
        return sorted(to_string(pattern, len(self.domain)) for pattern in self.patterns)

    def __contains__(self, pattern: Union[int, str]) -> bool:
        if isinstance(pattern, str):
            pattern = parse_pattern(pattern, len(self.domain))
        return pattern in self.patterns


class FamilyDescriptor(BaseModel):
    """A parametric family named by kind; kind-specific checks run in the family itself."""

    model_config = ConfigDict(frozen=True)

    kind: str
    ground: GroundSet
    support: Tuple[int, ...] = ()
    blocks: Tuple[int, ...] = ()
    pivot: Optional[int] = None

    @property
    def n(self) -> int:
        return self.ground.size


def parse_pattern(text: str, width: int) -> int:
    """Parse a 0/1 string of the given width into a pattern."""
    if len(text) != width:
        raise BadPattern(ERROR_MESSAGES["pattern_width"].format(text, width))
    if set(text) - {"0", "1"}:
        raise BadPattern(ERROR_MESSAGES["pattern_alphabet"].format(text))
    return from_string(text)


class HypothesisClass:
    """
    H subset of 2^X over a finite ground, either explicit or a parametric family.

    Explicit traces are a sorted, deduplicated, read-only uint64 array. Instances
    are immutable.
    """

    __slots__ = ("_ground", "_traces", "_family")

    def __init__(
        self,
        ground: GroundSet,
        traces: Optional[np.ndarray] = None,
        family: Optional[FamilyDescriptor] = None,
    ):
        if (traces is None) == (family is None):
            raise BadDescriptor("A hypothesis class is either explicit or a family, not both or neither")
        if family is not None and family.ground != ground:
            raise BadDescriptor(ERROR_MESSAGES["ground_mismatch"].format(family.ground.size, ground.size))
        if traces is not None:
            if traces.size and int(traces[-1]) >> ground.size:
                raise BadDescriptor(ERROR_MESSAGES["trace_width"].format(int(traces[-1]), ground.size))
        self._ground = ground
        self._traces = traces
        self._family = family

    @classmethod
    def explicit(cls, ground: Union[GroundSet, int], traces: Iterable[Union[int, str]]) -> "HypothesisClass":
        """Build an explicit class from integers or bit strings; duplicates collapse."""
        if isinstance(ground, int):
            ground = GroundSet(size=ground)
        values = []
        for trace in traces:
            if isinstance(trace, str):
                trace = parse_pattern(trace, ground.size)
            if not 0 <= trace < 1 << ground.size:
                raise BadDescriptor(ERROR_MESSAGES["trace_width"].format(trace, ground.size))
            values.append(trace)
        return cls(ground, traces=as_trace_array(values))

    @classmethod
    def from_family(cls, descriptor: FamilyDescriptor) -> "HypothesisClass":
        return cls(descriptor.ground, family=descriptor)

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def n(self) -> int:
        return self._ground.size

    @property
    def is_explicit(self) -> bool:
        return self._traces is not None

    @property
    def family(self) -> Optional[FamilyDescriptor]:
        return self._family

    @property
    def traces(self) -> np.ndarray:
        """Explicit trace array; families go through operations.materialize."""
        if self._traces is None:
            raise BadDescriptor("Family classes must be materialized first")
        return self._traces

    def strings(self) -> List[str]:
        return [to_string(int(t), self.n) for t in self.traces]

    def _key(self) -> Tuple[int, bytes]:
        from falsilab.core.operations import materialize

        return self.n, materialize(self).tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HypothesisClass):
            return NotImplemented
        if self._family is not None and self._family == other._family:
            return True
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self._family is not None:
            return f"HypothesisClass(family={self._family.kind}, n={self.n})"
        return f"HypothesisClass(n={self.n}, traces={len(self._traces)})"
