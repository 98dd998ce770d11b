"""
Base family module containing the abstract base class for all hypothesis families.
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence, Set

import numpy as np

from falsilab.constants import ERROR_MESSAGES
from falsilab.core.bitset import TRACE_DTYPE, compress
from falsilab.core.model import FamilyDescriptor
from falsilab.exceptions import BadDescriptor
from falsilab.utils.logger import setup_logger


class BaseFamily(ABC):
    """
    Base class for parametric families.

    A family generates its traces on demand and may provide an analytic
    restriction rule that avoids materialization.
    """

    def __init__(self):
        """Initialize the family with a logger."""
        self.logger = setup_logger(f"{__name__}.{self.__class__.__name__}")

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the kind name of the family."""
        pass

    def validate_params(self, descriptor: FamilyDescriptor) -> None:
        """
        Validate descriptor parameters for this family.

        Raises:
            BadDescriptor: If parameters are invalid
        """
        pass

    @abstractmethod
    def generate(self, descriptor: FamilyDescriptor) -> np.ndarray:
        """
        Materialize every trace of the family.

        Returns:
            Sorted, deduplicated uint64 array
        """
        pass

    def restrict(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[Set[int]]:
        """
        Analytic restriction to an ordered domain, or None to fall back to materialization.

        Returns:
            Set of domain-ordered patterns
        """
        return None

    def pattern_count(self, descriptor: FamilyDescriptor, domain: Sequence[int]) -> Optional[int]:
        """Analytic |H|Y|, or None to fall back to materialization."""
        patterns = self.restrict(descriptor, domain)
        return None if patterns is None else len(patterns)

    @abstractmethod
    def expected_vc(self, descriptor: FamilyDescriptor) -> Optional[int]:
        """Closed-form VC dimension; None where it is undefined."""
        pass

    def reject(self, detail: str) -> None:
        raise BadDescriptor(ERROR_MESSAGES["family_param"].format(self.name, detail))

    def validate_index(self, descriptor: FamilyDescriptor, index: int, what: str) -> None:
        if not 0 <= index < descriptor.n:
            self.reject(f"{what} {index} is outside the ground set of size {descriptor.n}")

    @staticmethod
    def patterns_from_traces(traces: np.ndarray, domain: Sequence[int]) -> Set[int]:
        return {int(p) for p in np.unique(compress(traces, domain))}

    @staticmethod
    def to_array(values) -> np.ndarray:
        array = np.unique(np.asarray(list(values), dtype=TRACE_DTYPE))
        array.setflags(write=False)
        return array
