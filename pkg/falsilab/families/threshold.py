"""
Threshold family: h_t(i) = 1 iff i >= t, for t in {0, ..., n}.
"""

from typing import Optional, Sequence, Set

import numpy as np

from falsilab.core.bitset import all_bits_mask
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.base import BaseFamily


@FamilyRegistry.register
class ThresholdFamily(BaseFamily):
    """Upward-closed rays of the ground order."""

    @property
    def name(self) -> str:
        return "threshold"

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        full = all_bits_mask(descriptor.n)
        return self.to_array(full ^ all_bits_mask(t) for t in range(descriptor.n + 1))

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        # The pattern only changes when t passes an element of the domain
        cuts = {0} | {element + 1 for element in domain}
        return {sum(1 << j for j, element in enumerate(domain) if element >= t) for t in cuts}

    def pattern_count(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[int]:
        return len(domain) + 1

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return 1
