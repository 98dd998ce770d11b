"""
Coordinate-half family: all traces with bit `pivot` equal to 0.

Finite stand-in for a dense-codense class: on any window avoiding the pivot
both the class and its complement restrict to the full cube.
"""

from falsilab.core.bitset import all_bits_mask
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.subcube import SubcubeFamily


@FamilyRegistry.register
class CoordinateHalfFamily(SubcubeFamily):
    @property
    def name(self) -> str:
        return "coordhalf"

    def validate_params(self, descriptor: FamilyDescriptor) -> None:
        if descriptor.pivot is None:
            self.reject("requires a pivot")
        self.validate_index(descriptor, descriptor.pivot, "pivot")

    def free_mask(self, descriptor: FamilyDescriptor) -> int:
        return all_bits_mask(descriptor.n) & ~(1 << descriptor.pivot)
