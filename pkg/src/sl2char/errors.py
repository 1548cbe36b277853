"""Exception hierarchy.

The CLI maps these onto exit codes: input problems exit 1, mathematically
degenerate input exits 2, and internal invariant violations exit 3.
"""


class Sl2Error(Exception):
    """Base class for all library errors."""

    exit_code = 3


class InputError(Sl2Error, ValueError):
    """Malformed or inconsistent user input."""

    exit_code = 1


class StructuralError(InputError, TypeError):
    """Operands that do not live in the same ring, or shapes that do not fit."""


class DegenerateError(Sl2Error, ArithmeticError):
    """Input lies on a degenerate locus where the construction breaks down."""

    exit_code = 2


class DegenerateModulusError(DegenerateError, ZeroDivisionError):
    """Zero norm in a quadratic extension (the modulus splits at this point)."""


class PoleError(DegenerateError, ZeroDivisionError):
    """A denominator vanishes at a specialization point."""


class DegenerateCharacterError(DegenerateError):
    """The discriminant of the seed pair is not invertible."""


class ParabolicBoundaryError(DegenerateError):
    """A boundary trace is identically +-2."""


class NonRegularPointError(DegenerateError):
    """The torsion determinant vanishes at the requested point."""


class DegenerateBoundaryError(DegenerateError):
    """Boundary evaluation map is singular."""


class InconsistentSeedError(InputError):
    """Seed matrices do not have the prescribed traces."""


class InvariantError(Sl2Error, AssertionError):
    """An internal consistency check failed."""

    exit_code = 3


class ConventionError(InvariantError):
    """A frozen convention does not hold for the given input."""


class InvalidBasisError(InvariantError):
    """Supplied cohomology classes are dependent or do not span."""


class RankError(InvariantError):
    """A complex is not exact where exactness was required."""
