"""Shared error types for the verification suites.

Numerical operations in this package never return NaN/inf silently; when an
evaluation point is too close to a pole, or an iterative scheme fails its own
convergence check, one of the exceptions below is raised with enough context
to reproduce the failure.
"""

from __future__ import annotations


class PoleProximity(ValueError):
    """Requested evaluation point lies inside the exclusion disk of a pole."""

    def __init__(self, message: str, point=None, pole=None):
        super().__init__(message)
        self.point = point
        self.pole = pole


class NonConvergence(RuntimeError):
    """An adaptive scheme exhausted its budget before meeting its tolerance."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DomainError(ValueError):
    """Arguments fall outside the validity domain of an operation."""
