"""Exception hierarchy.

Input-shaped problems derive from :class:`InputError`, mathematical failures of
a well-formed input from :class:`MathematicalError`. The CLI maps these to
distinct exit codes.
"""


class G2NuError(Exception):
    """Base class for all errors raised by this package."""


class InputError(G2NuError, ValueError):
    """Malformed input data (wrong shapes, non-integers, unknown ids)."""


class UnsupportedSurdError(InputError):
    """A length expression leaves the field Q(sqrt2, sqrt3)."""


class MathematicalError(G2NuError, ValueError):
    """Well-formed input that violates a mathematical hypothesis."""


class InvalidLatticeError(MathematicalError):
    """A polarising lattice is odd, degenerate or has the wrong signature."""


class DegenerateSpanError(MathematicalError):
    """The span of the two sublattices is degenerate."""


class BlockNotProjectableError(MathematicalError):
    """Orthogonal projection onto a degenerate block was requested."""


class NonOrthogonalCompositeError(MathematicalError):
    """The composite isometry has eigenvalues off the unit circle or is not semisimple."""


class DecompositionError(MathematicalError):
    """No definite invariant decomposition: a rotation plane is indefinite."""


class CompatibilityError(MathematicalError):
    """The positive configuration angles disagree with the gluing angle."""


class NotApplicableError(MathematicalError):
    """The hypotheses of a classification result are not met."""
