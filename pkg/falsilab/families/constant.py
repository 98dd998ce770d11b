"""
Degenerate families: the full cube, the single all-heads trace, and the empty class.
"""

from typing import Optional, Sequence, Set

import numpy as np

from falsilab.core.bitset import all_bits_mask, all_traces
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.base import BaseFamily
from falsilab.families.subcube import SubcubeFamily


@FamilyRegistry.register
class FullFamily(SubcubeFamily):
    @property
    def name(self) -> str:
        return "full"

    def free_mask(self, descriptor: FamilyDescriptor) -> int:
        return all_bits_mask(descriptor.n)

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        return all_traces(descriptor.n)


@FamilyRegistry.register
class AllHeadsFamily(BaseFamily):
    """Every coin flip is heads: the constant-1 trace."""

    @property
    def name(self) -> str:
        return "allheads"

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        return self.to_array([all_bits_mask(descriptor.n)])

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        return {all_bits_mask(len(domain))}

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return 0


@FamilyRegistry.register
class EmptyFamily(BaseFamily):
    @property
    def name(self) -> str:
        return "empty"

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        return self.to_array([])

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        return set()

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return None
