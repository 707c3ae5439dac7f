"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "CapabilityError",
    "ConstructionError",
    "NumericDegeneracyError",
]


class CapabilityError(ValueError):
    """An operation was requested on a group it does not support."""


class NumericDegeneracyError(RuntimeError):
    """The class-sum eigenvalue method failed to separate eigenspaces."""

    def __init__(self, failed_class_sums: list[int]):
        self.failed_class_sums = list(failed_class_sums)
        super().__init__(
            "class-sum matrices failed to separate a common eigenbasis; "
            f"offending class sums: {self.failed_class_sums}"
        )


class ConstructionError(RuntimeError):
    """A certified construction failed its own bentness self-check."""
