"""
Hypothesis families: constructors for every named family and their analytic VC dimensions.
"""

from typing import Iterable, Optional

from falsilab.core.model import FamilyDescriptor, GroundSet, HypothesisClass
from falsilab.core.registry import FamilyRegistry
from falsilab.families import (constant, coordinate_half, cylinder, even_zero, interval,  # noqa: F401
                               partition, threshold)


def describe(
    kind: str,
    n: int,
    support: Iterable[int] = (),
    blocks: Iterable[int] = (),
    pivot: Optional[int] = None,
) -> FamilyDescriptor:
    """Shorthand for a descriptor on the ground {0, ..., n-1}."""
    return FamilyDescriptor(
        kind=kind, ground=GroundSet(size=n), support=tuple(support), blocks=tuple(blocks), pivot=pivot
    )


def make_family(descriptor: FamilyDescriptor) -> HypothesisClass:
    """
    Build the hypothesis class named by a descriptor.

    Raises:
        BadDescriptor: If the kind is unknown or its parameters are invalid
    """
    FamilyRegistry.get_family(descriptor.kind).validate_params(descriptor)
    return HypothesisClass.from_family(descriptor)


def expected_vc(descriptor: FamilyDescriptor) -> Optional[int]:
    """Closed-form VC dimension of a family; None for the empty class."""
    family = FamilyRegistry.get_family(descriptor.kind)
    family.validate_params(descriptor)
    return family.expected_vc(descriptor)
