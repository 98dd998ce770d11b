"""
Cylinder family H_Y: all traces that are zero off a support Y.
"""

from falsilab.core.bitset import mask_of
from falsilab.core.model import FamilyDescriptor
from falsilab.core.registry import FamilyRegistry
from falsilab.families.subcube import SubcubeFamily


@FamilyRegistry.register
class CylinderFamily(SubcubeFamily):
    """Restricts to the full cube on every subset of the support."""

    @property
    def name(self) -> str:
        return "cylinder"

    def validate_params(self, descriptor: FamilyDescriptor) -> None:
        for element in descriptor.support:
            self.validate_index(descriptor, element, "support element")
        if len(set(descriptor.support)) != len(descriptor.support):
            self.reject(f"support {list(descriptor.support)} repeats an element")

    def free_mask(self, descriptor: FamilyDescriptor) -> int:
        return mask_of(descriptor.support)
