"""
Even-zero family: all traces vanishing on even indices.

Shatters the odd coordinates but no set containing an even one, so every
Popper dimension is at most 1 while the VC dimension grows with the ground.
"""

from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.subcube import SubcubeFamily


@FamilyRegistry.register
class EvenZeroFamily(SubcubeFamily):
    @property
    def name(self) -> str:
        return "evenzero"

    def free_mask(self, descriptor: FamilyDescriptor) -> int:
        return sum(1 << i for i in range(1, descriptor.n, 2))
