"""
Partition-union family: traces supported entirely inside one block of a
partition of the ground into consecutive blocks (zero elsewhere).

Each block is shattered, so the VC dimension is the largest block size, yet no
set meeting two blocks is shattered. The all-zero trace is shared by every block.
"""

from typing import List, Optional, Sequence, Set

import numpy as np

from falsilab.core.bitset import all_bits_mask, popcount, submasks
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.base import BaseFamily


@FamilyRegistry.register
class PartitionFamily(BaseFamily):
    @property
    def name(self) -> str:
        return "partition"

    def validate_params(self, descriptor: FamilyDescriptor) -> None:
        if not descriptor.blocks:
            self.reject("requires at least one block")
        if any(size < 1 for size in descriptor.blocks):
            self.reject(f"block sizes {list(descriptor.blocks)} must be positive")
        if sum(descriptor.blocks) != descriptor.n:
            self.reject(f"block sizes {list(descriptor.blocks)} must sum to the ground size {descriptor.n}")

    def block_masks(self, descriptor: FamilyDescriptor) -> List[int]:
        masks = []
        start = 0
        for size in descriptor.blocks:
            masks.append(all_bits_mask(size) << start)
            start += size
        return masks

    def block_positions(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> List[int]:
        return [
            sum(1 << j for j, element in enumerate(domain) if (block >> element) & 1)
            for block in self.block_masks(descriptor)
        ]

    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        return self.to_array(trace for block in self.block_masks(descriptor) for trace in submasks(block))

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        return {p for positions in self.block_positions(descriptor, domain) for p in submasks(positions)}

    def pattern_count(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[int]:
        return 1 + sum((1 << popcount(positions)) - 1 for positions in self.block_positions(descriptor, domain))

    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        return max(descriptor.blocks)
