"""
Restriction and shattering primitives every other module consumes.
"""

from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

import falsilab.families  # noqa: F401  (populates the family registry)
from config.settings import get_settings
from falsilab.constants import ERROR_MESSAGES, LARGE_CLASS_THRESHOLD
from falsilab.core.bitset import (all_traces, as_trace_array, compress, mask_of, masked_unique)
from falsilab.core.model import (FamilyDescriptor, GroundSet, HypothesisClass, PartialAssignment,
                                 SamplePrefix, TraceSet)
from falsilab.core.registry import FamilyRegistry
from falsilab.exceptions import BadDescriptor, CapExceeded, InvalidSubset
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)


@lru_cache(maxsize=32)
def _generate(descriptor: FamilyDescriptor) -> np.ndarray:
    traces = FamilyRegistry.get_family(descriptor.kind).generate(descriptor)
    if traces.size > LARGE_CLASS_THRESHOLD:
        logger.info(f"Materialized {descriptor.kind} on ground {descriptor.n}: {traces.size:,} traces")
    return traces


def _check_cap(n: int, cap: Optional[int]) -> None:
    cap = get_settings().cap if cap is None else cap
    if n > cap:
        raise CapExceeded(ERROR_MESSAGES["cap_exceeded"].format(n, cap))


def materialize(hclass: HypothesisClass, cap: Optional[int] = None) -> np.ndarray:
    """
    Return the explicit trace array of a class.

    Args:
        hclass: Explicit or family class
        cap: Largest ground a family may be materialized on (settings default)

    Raises:
        CapExceeded: If a family lives on a ground above the cap
    """
    if hclass.is_explicit:
        return hclass.traces
    _check_cap(hclass.n, cap)
    return _generate(hclass.family)


def as_explicit(hclass: HypothesisClass, cap: Optional[int] = None) -> HypothesisClass:
    if hclass.is_explicit:
        return hclass
    return HypothesisClass(hclass.ground, traces=materialize(hclass, cap))


class PatternCounter:
    """
    Counts |H|Y| for many subsets Y of one class.

    Families with an analytic rule never materialize; everything else masks
    the trace array and collapses duplicates.
    """

    def __init__(self, hclass: HypothesisClass, cap: Optional[int] = None):
        self.hclass = hclass
        self.family = None
        self.traces = None
        if not hclass.is_explicit:
            family = FamilyRegistry.get_family(hclass.family.kind)
            if family.pattern_count(hclass.family, ()) is not None:
                self.family = family
        if self.family is None:
            self.traces = materialize(hclass, cap)

    def count(self, domain: Sequence[int]) -> int:
        if self.family is not None:
            return self.family.pattern_count(self.hclass.family, domain)
        if self.traces.size == 0:
            return 0
        return masked_unique(self.traces, mask_of(domain)).size

    def size(self) -> int:
        """|H|, the count on the whole ground."""
        return self.count(range(self.hclass.n))


def pattern_count(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> int:
    """|H restricted to subset|, analytic when the family allows."""
    domain = hclass.ground.check_subset(subset)
    return PatternCounter(hclass, cap).count(domain)


def class_size(hclass: HypothesisClass, cap: Optional[int] = None) -> int:
    return PatternCounter(hclass, cap).size()


def restrict(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> TraceSet:
    """
    Restrict a class to an ordered subset, collapsing duplicate patterns.

    Raises:
        InvalidSubset: On duplicate or out-of-range elements
    """
    domain = hclass.ground.check_subset(subset)
    if not hclass.is_explicit:
        patterns = FamilyRegistry.get_family(hclass.family.kind).restrict(hclass.family, domain)
        if patterns is not None:
            return TraceSet(domain=domain, patterns=frozenset(patterns))
    traces = materialize(hclass, cap)
    if traces.size == 0:
        return TraceSet(domain=domain, patterns=frozenset())
    reduced = masked_unique(traces, mask_of(domain))
    return TraceSet(domain=domain, patterns=frozenset(int(p) for p in np.unique(compress(reduced, domain))))


def shatters(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> bool:
    """True iff the class realizes all 2^|subset| patterns on subset."""
    domain = hclass.ground.check_subset(subset)
    return PatternCounter(hclass, cap).count(domain) == 1 << len(domain)


def complement(hclass: HypothesisClass, cap: Optional[int] = None) -> HypothesisClass:
    """
    Explicit class 2^X minus H.

    Raises:
        CapExceeded: If 2^n traces exceed the cap
    """
    _check_cap(hclass.n, cap)
    remaining = np.setdiff1d(all_traces(hclass.n), materialize(hclass, cap), assume_unique=True)
    remaining.setflags(write=False)
    return HypothesisClass(hclass.ground, traces=remaining)


def conditioned_class(hclass: HypothesisClass, assign: PartialAssignment, cap: Optional[int] = None) -> HypothesisClass:
    """
    H_f: the traces of H extending a partial assignment. The empty assignment returns H itself.

    Raises:
        InvalidAssignment: If an index lies outside the ground
    """
    assign.check(hclass.ground)
    if not len(assign):
        return hclass
    traces = materialize(hclass, cap)
    domain_mask, value_mask = assign.masks()
    kept = traces[(traces & np.uint64(domain_mask)) == np.uint64(value_mask)]
    kept.setflags(write=False)
    return HypothesisClass(hclass.ground, traces=kept)


def _same_ground(first: HypothesisClass, second: HypothesisClass) -> GroundSet:
    if first.ground != second.ground:
        raise BadDescriptor(ERROR_MESSAGES["ground_mismatch"].format(first.n, second.n))
    return first.ground


def union(first: HypothesisClass, second: HypothesisClass, cap: Optional[int] = None) -> HypothesisClass:
    ground = _same_ground(first, second)
    traces = np.union1d(materialize(first, cap), materialize(second, cap))
    traces.setflags(write=False)
    return HypothesisClass(ground, traces=traces)


def intersection(first: HypothesisClass, second: HypothesisClass, cap: Optional[int] = None) -> HypothesisClass:
    ground = _same_ground(first, second)
    traces = np.intersect1d(materialize(first, cap), materialize(second, cap), assume_unique=True)
    traces.setflags(write=False)
    return HypothesisClass(ground, traces=traces)


def restricted_class(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> HypothesisClass:
    """H|Y viewed as a class over the ground {0, ..., |Y|-1} (element j stands for Y[j])."""
    trace_set = restrict(hclass, subset, cap)
    if not trace_set.domain:
        raise InvalidSubset(ERROR_MESSAGES["range"].format("Subset size", 1, hclass.n, 0))
    return HypothesisClass(GroundSet(size=len(trace_set.domain)), traces=as_trace_array(trace_set.patterns))


def _saturated(hclass: HypothesisClass, domain: Tuple[int, ...], cap: Optional[int]) -> np.ndarray:
    """Masked traces of H whose whole fibre of 2^(n-|S|) extensions lies in H."""
    traces = materialize(hclass, cap)
    # A fibre of 2^63 or more traces cannot be saturated by an array
    if traces.size == 0 or hclass.n - len(domain) >= 63:
        return traces[:0]
    values, counts = np.unique(traces & np.uint64(mask_of(domain)), return_counts=True)
    return values[counts == (1 << (hclass.n - len(domain)))]


def complement_pattern_count(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> int:
    """
    |H^c restricted to subset| without materializing H^c.

    A pattern on S is missing from H^c|S exactly when all 2^(n-|S|) of its
    extensions lie in H.
    """
    domain = hclass.ground.check_subset(subset)
    return (1 << len(domain)) - _saturated(hclass, domain, cap).size


def complement_restrict(hclass: HypothesisClass, subset: Iterable[int], cap: Optional[int] = None) -> TraceSet:
    """H^c restricted to subset, by the same fibre argument as complement_pattern_count."""
    domain = hclass.ground.check_subset(subset)
    excluded = {int(p) for p in compress(_saturated(hclass, domain, cap), domain)}
    return TraceSet(domain=domain, patterns=frozenset(set(range(1 << len(domain))) - excluded))


def complete_sample(prefix: SamplePrefix, ground: GroundSet) -> SamplePrefix:
    """Extend a prefix to a full sample by appending the unused elements in ascending order."""
    prefix.check(ground)
    used = set(prefix.order)
    return SamplePrefix(order=prefix.order + tuple(i for i in ground.elements if i not in used))
