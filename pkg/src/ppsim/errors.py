"""Error taxonomy shared by the library and the command line front end.

Library code raises these instead of bare ValueError so callers (and the
CLI exit-code mapping) can tell input-shape problems apart from pipeline
failures.
"""

from __future__ import annotations


class SimulationError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateStateError(SimulationError):
    """The shift register was seeded with the all-zero state."""


class NonPrimitivePolynomialError(SimulationError):
    """A feedback polynomial failed the full-period primitivity check."""


class ClosureError(SimulationError):
    """An elementwise sequence product left the sequence set."""


class DimensionMismatchError(SimulationError):
    """Operands disagree on length, shape, or arity."""


class PeriodUnusableError(SimulationError):
    """The recovered period cannot produce nontrivial factors."""


class UnrepresentableStateError(SimulationError):
    """Every permutation term of a status matrix is empty."""


class FormatError(SimulationError):
    """A serialized artifact could not be parsed."""
