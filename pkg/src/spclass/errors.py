"""Exception types shared across the package.

Everything derives from SpclassError so callers can catch domain failures
without swallowing programming errors.  Division by zero in a field uses
the builtin ZeroDivisionError.
"""


class SpclassError(Exception):
    """Base class for all package-specific errors."""


# --- field and ring construction -------------------------------------------

class NotOddPrime(SpclassError):
    """The requested modulus is not an odd prime."""


class ModulusMismatch(SpclassError):
    """Two operands carry different base fields or ring moduli."""


class NotIrreducible(SpclassError):
    """A modulus or input polynomial that must be irreducible is not."""


class NotSelfReciprocal(SpclassError):
    """The polynomial does not equal its reciprocal, so the coefficient
    involution of the quotient ring is not defined."""


class DegreeOne(SpclassError):
    """Degree-1 modulus: the involution degenerates and must be handled
    by the unit-eigenvalue route instead."""


class NoSolution(SpclassError):
    """A search guaranteed to succeed under its preconditions failed,
    i.e. the preconditions were violated."""


# --- polynomials ------------------------------------------------------------

class NotMonic(SpclassError):
    """Operation defined for monic polynomials only."""


class ZeroConstantTerm(SpclassError):
    """t divides the polynomial, so reciprocals and inverses do not exist."""


# --- matrices ---------------------------------------------------------------

class DimensionMismatch(SpclassError):
    """Incompatible matrix shapes."""


class DimensionCap(SpclassError):
    """Requested size exceeds the supported desk-scale cap."""


class SingularMatrix(SpclassError):
    """Inverse requested of a singular matrix, or an inconsistent solve."""


# --- alternating forms ------------------------------------------------------

class OddDimension(SpclassError):
    """Nondegenerate alternating forms need even dimension."""


class NotSkew(SpclassError):
    """Matrix expected to be skew-symmetric is not."""


class SingularForm(SpclassError):
    """A nondegenerate form was required but the input is degenerate."""


# --- classification ---------------------------------------------------------

class SingularInput(SpclassError):
    """t divides the characteristic polynomial; the matrix is singular."""


class NotSemisimple(SpclassError):
    """The minimal polynomial is not separable."""


class UnpairedFactor(SpclassError):
    """An irreducible factor and its reciprocal occur with different
    multiplicities, so the matrix preserves no symplectic form."""


class SelfReciprocalInput(SpclassError):
    """A paired-polynomial construction was fed a self-reciprocal input."""


class OddMultiplicity(SpclassError):
    """Unit eigenvalues need an even-dimensional eigenspace."""


class InfeasibleDescriptor(SpclassError):
    """The descriptor admits no nondegenerate invariant alternating form."""


class NotHermitian(SpclassError):
    """Matrix over the extension field is not fixed by conjugate-transpose."""


class PreconditionViolated(SpclassError):
    """An argument fails the documented entry conditions of the operation."""


# --- brute-force oracle -----------------------------------------------------

class CapExceeded(SpclassError):
    """Group order exceeds the brute-force enumeration cap."""


class ClosureMismatch(SpclassError):
    """Generated group order disagrees with the order formula."""
