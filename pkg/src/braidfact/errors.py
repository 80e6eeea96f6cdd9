"""Shared error types."""

from __future__ import annotations


class FormatError(ValueError):
    """A text input does not conform to one of the documented file formats."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its node budget before finishing.

    Distinct from a completed search that found nothing within its bounds.
    """

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes
