"""Exception hierarchy shared by all homkit modules."""


class HomkitError(Exception):
    """Base class for every error raised by homkit."""


class DimensionMismatch(HomkitError):
    """Operands have incompatible shapes or ambient dimensions."""


class SingularMatrix(HomkitError):
    """A matrix required to be invertible has rank < dim."""


class InvariantViolation(HomkitError):
    """Input data breaks a constructor invariant (e.g. skewsymmetry)."""


class NotRegular(HomkitError):
    """The twist of a hom-Lie algebra is not invertible (or the algebra
    fails its axioms), where regularity is required."""


class NotARepresentation(HomkitError):
    """The given (rho, beta) data fails the representation identities."""


class NotHomCochain(HomkitError):
    """A cochain does not satisfy the twist-compatibility invariant."""


class NotDirac(HomkitError):
    """A subspace fails one of the Dirac-structure conditions."""


class ParseError(HomkitError):
    """Malformed input file or literal (position information included
    in the message when available)."""
