"""Exception types shared across the package.

Every error raised by a public operation derives from LogminError, so
callers (in particular the CLI) can distinguish bad input from bugs.
"""


class LogminError(Exception):
    """Base class for all errors raised by logmin operations."""


class AmbientMismatch(LogminError):
    """An element or hom was used with a group of a different shape."""


class NotInSubgroup(LogminError):
    """Requested coordinates of an element outside the subgroup."""


class InvalidHom(LogminError):
    """A matrix does not define a homomorphism (torsion incompatibility)."""


class NotAMember(LogminError):
    """A required monoid membership fails (e.g. generator image)."""


class NotSharp(LogminError):
    """Operation requires a sharp (unit-free) monoid."""


class NotPointed(LogminError):
    """The rational cone contains a line; no Hilbert basis exists."""


class NotMonomorphism(LogminError):
    """Operation requires an injective monoid homomorphism."""


class NotIntegralMono(LogminError):
    """Operation requires an integral monomorphism of fine sharp monoids."""


class NilpotentsPresent(LogminError):
    """Operation requires a nilpotent-free hom but a nilpotent was found."""


class NilpotenceInconclusive(LogminError):
    """Bounded nilpotence search could not certify absence of nilpotents."""


class WrongCokernelClass(LogminError):
    """The cokernel is not of the class the operation requires."""


class NotAFace(LogminError):
    """The given submonoid is not a face."""


class BoundExceeded(LogminError):
    """A configured size or degree bound was exceeded."""


class BoundsTooTight(LogminError):
    """Rejection sampling exceeded its retry cap."""


class ValidationFailure(LogminError):
    """A categorical structure violates its laws; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class AssociativityViolation(ValidationFailure):
    """Composition table is not associative; witness is the triple."""


class IdentityViolation(ValidationFailure):
    """Identity laws fail; witness is the offending morphism."""


class FunctorLawViolation(ValidationFailure):
    """A functor fails to preserve identities or composition."""


class UnknownObject(LogminError):
    """An object identifier is not present in the category."""


class NotGroupoidFibration(LogminError):
    """Operation requires a groupoid fibration."""


class ConditionsNotSatisfied(LogminError):
    """The descent conditions (B1/B2) fail for the given tower."""


class ConstructionFailure(LogminError):
    """A descent construction step found no (or no unique) completion.

    This should never fire on inputs satisfying the preconditions; if it
    does, it is a bug witness, not a user error.
    """

    def __init__(self, message: str, diagram=None):
        super().__init__(message)
        self.diagram = diagram
