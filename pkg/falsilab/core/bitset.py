"""
Integer-backed bitset helpers for traces and patterns.

Element i of the ground set is bit i of a trace. A pattern over an ordered
domain (d_0, ..., d_{k-1}) carries the value at d_j in bit j.
"""

from typing import Iterable, Iterator, Sequence

import numpy as np

TRACE_DTYPE = np.uint64

_ONE = np.uint64(1)


def popcount(x: int) -> int:
    """Count number of set bits in integer."""
    return bin(x).count("1")


def mask_of(indices: Iterable[int]) -> int:
    """Create bitset from list of bit indices."""
    result = 0
    for i in indices:
        result |= 1 << i
    return result


def all_bits_mask(num_bits: int) -> int:
    """Create mask with all num_bits set."""
    return (1 << num_bits) - 1


def to_string(value: int, width: int) -> str:
    """Render a trace or pattern, character j being bit j."""
    return "".join("1" if (value >> j) & 1 else "0" for j in range(width))


def from_string(text: str) -> int:
    """Inverse of to_string; the caller validates the alphabet."""
    value = 0
    for j, char in enumerate(text):
        if char == "1":
            value |= 1 << j
    return value


def as_trace_array(values: Iterable[int]) -> np.ndarray:
    """Sorted, deduplicated, read-only uint64 array."""
    array = np.unique(np.fromiter((int(v) for v in values), dtype=TRACE_DTYPE))
    array.setflags(write=False)
    return array


def all_traces(num_bits: int) -> np.ndarray:
    """Every trace over a ground of num_bits elements."""
    array = np.arange(1 << num_bits, dtype=TRACE_DTYPE)
    array.setflags(write=False)
    return array


def masked_unique(traces: np.ndarray, mask: int) -> np.ndarray:
    """Distinct values of traces & mask."""
    return np.unique(traces & np.uint64(mask))


def compress(values: np.ndarray, domain: Sequence[int]) -> np.ndarray:
    """Gather the bits at domain positions into domain-ordered patterns."""
    patterns = np.zeros(values.shape, dtype=TRACE_DTYPE)
    for j, element in enumerate(domain):
        patterns |= ((values >> np.uint64(element)) & _ONE) << np.uint64(j)
    return patterns


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, from mask down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
