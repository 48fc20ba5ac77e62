"""Type-D domino tableaux: insertion, cycles, wall-crossing operators and
the generalized tau-invariant."""

__version__ = "0.1.0"
