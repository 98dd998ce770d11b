"""
Family registry module for managing available hypothesis families.
"""

from typing import TYPE_CHECKING, Dict, Type

from falsilab.constants import ERROR_MESSAGES
from falsilab.exceptions import BadDescriptor
from falsilab.utils.logger import setup_logger

if TYPE_CHECKING:
    from falsilab.families.base import BaseFamily

logger = setup_logger(__name__)


class FamilyRegistry:
    """Registry for managing available families."""

    _instance = None
    _families: Dict[str, "BaseFamily"] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(FamilyRegistry, cls).__new__(cls)
        return cls._instance

    @classmethod
    def register(cls, family_cls: Type["BaseFamily"]) -> Type["BaseFamily"]:
        """
        Register a family class. Usable as a class decorator.

        Args:
            family_cls: Family class to register

        Returns:
            The registered family class
        """
        instance = family_cls()
        cls._families[instance.name] = instance
        logger.debug(f"Registered family: {instance.name}")
        return family_cls

    @classmethod
    def get_family(cls, name: str) -> "BaseFamily":
        """
        Get a family by kind name.

        Raises:
            BadDescriptor: If no family with the given name is registered
        """
        if name not in cls._families:
            raise BadDescriptor(ERROR_MESSAGES["unknown_family"].format(name, sorted(cls._families)))
        return cls._families[name]

    @classmethod
    def list_families(cls) -> Dict[str, "BaseFamily"]:
        """Return registered families keyed by kind name."""
        return cls._families.copy()
