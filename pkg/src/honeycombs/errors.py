"""Exception types shared across the package."""

from __future__ import annotations


class HoneycombError(Exception):
    """Base class for all domain errors."""


class DimensionMismatchError(HoneycombError):
    """Spectra or index data of unequal lengths."""


class InfeasibleProgramError(HoneycombError):
    """A linear program required to be feasible is not."""


class UnboundedDirectionError(HoneycombError):
    """A priority variable is unbounded during lexicographic optimization."""


class InfeasibleTripleError(HoneycombError):
    """Operation requires a feasible boundary triple."""


class OutOfConeError(HoneycombError):
    """A deformation would leave the honeycomb cone.

    Carries the first blocking edge and the maximal admissible |t| in the
    requested direction.
    """

    def __init__(self, blocking_edge: str, max_t):
        self.blocking_edge = blocking_edge
        self.max_t = max_t
        super().__init__(
            f"deformation blocked by edge {blocking_edge}; max |t| = {max_t}")


class NotClockwiseError(HoneycombError):
    """Overlay is not consistently A-clockwise."""


class NonTransverseError(HoneycombError):
    """Overlay has a non-transverse intersection."""


class TooLargeError(HoneycombError):
    """Instance exceeds a desk-scale guard."""


class NotHermitianError(HoneycombError):
    """Matrix violates the Hermitian invariant beyond tolerance."""


class InvariantError(HoneycombError):
    """An internal invariant that should be unbreakable was violated."""
