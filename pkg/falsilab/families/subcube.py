"""
Subcube families: every trace supported inside a fixed set of free coordinates.
"""

from abc import abstractmethod
from typing import Optional, Sequence, Set

import numpy as np

from falsilab.core.bitset import popcount, submasks
from falsilab.core.model import FamilyDescriptor
from falsilab.families.base import BaseFamily


class SubcubeFamily(BaseFamily):
    """H = {h : h(i) = 0 for every i outside free_mask}; restrictions are again subcubes."""

    @abstractmethod
    def free_mask(self, descriptor: FamilyDescriptor) -> int:
        pass

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        return self.to_array(submasks(self.free_mask(descriptor)))

    def free_positions(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> int:
        free = self.free_mask(descriptor)
        return sum(1 << j for j, element in enumerate(domain) if (free >> element) & 1)

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        return set(submasks(self.free_positions(descriptor, domain)))

    def pattern_count(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[int]:
        return 1 << popcount(self.free_positions(descriptor, domain))

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return popcount(self.free_mask(descriptor))
