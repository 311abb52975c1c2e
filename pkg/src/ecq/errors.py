"""Exception types shared across the package."""


class EcqError(Exception):
    pass


class SingularCurve(EcqError):
    """The quintuple of a-invariants has discriminant zero."""


class NotSquarefree(EcqError):
    """A twist parameter d was not squarefree."""


class NotPrime(EcqError):
    pass


class SingularFamilyMember(EcqError):
    """(a, b) with a^3 - 27 b = 0, or b = 0."""


class NotOrderThree(EcqError):
    """The supplied point does not have exact order 3."""


class OrderOutOfRange(EcqError):
    """Order query outside 2..12 (Mazur bound)."""


class UnreachableBranch(EcqError):
    """Defensive: inputs violated an invariant a classifier relies on."""


class OddFunctionalEquation(EcqError):
    """L(E,1) requested for a curve whose root number is not known to be +1."""


class RankPositiveSuspected(EcqError):
    """|L(E,1)| did not exceed its error bound; the curve may have rank > 0."""
