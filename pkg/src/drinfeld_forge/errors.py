"""Shared exception types."""

from __future__ import annotations


class RankError(ValueError):
    """Series/rank combination outside the supported range."""


class SpecError(ValueError):
    """Malformed or inconsistent splitting specification."""


class ForeignGeneratorError(KeyError):
    """An element references a generator outside the algebra's basis."""


class ClosureError(ValueError):
    """A claimed subspace fails to close under the bracket."""


class NotASubalgebraError(ClosureError):
    """Sub-bialgebra check was handed a span that is not bracket-closed."""
