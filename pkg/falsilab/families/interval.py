"""
Interval family: h_{a,b}(i) = 1 iff a < i < b, over endpoints -1 <= a < b <= n.
"""

from typing import Optional, Sequence, Set

import numpy as np

from falsilab.core.bitset import all_bits_mask
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.base import BaseFamily


@FamilyRegistry.register
class IntervalFamily(BaseFamily):
    """Open intervals with endpoints one step outside the ground, so empty and full are included."""

    @property
    def name(self) -> str:
        return "interval"

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        n = descriptor.n
        return self.to_array(
            all_bits_mask(b) ^ all_bits_mask(a + 1) for a in range(-1, n) for b in range(a + 1, n + 1)
        )

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        # Realized patterns: empty, plus every run of consecutive domain points in ground order
        ranked = sorted(range(len(domain)), key=lambda j: domain[j])
        patterns = {0}
        for start in range(len(ranked)):
            run = 0
            for stop in range(start, len(ranked)):
                run |= 1 << ranked[stop]
                patterns.add(run)
        return patterns

    def pattern_count(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[int]:
        k = len(domain)
        return 1 + k * (k + 1) // 2

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return min(2, descriptor.n)
