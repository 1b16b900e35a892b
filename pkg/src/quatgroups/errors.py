"""Exception types shared across the package."""


class QuatGroupsError(Exception):
    """Base class for all errors raised by quatgroups."""


class ZeroQuaternion(QuatGroupsError, ZeroDivisionError):
    pass


class NotCentral(QuatGroupsError, ValueError):
    """A quaternion with nonzero imaginary part was treated as a scalar."""


class NotUnitGroupElement(QuatGroupsError, ValueError):
    """A rational scalar is not of the form +-p^a l^b."""


class UnboundGenerator(QuatGroupsError, KeyError):
    pass


class NotOddPrime(QuatGroupsError, ValueError):
    pass


class BadPrimePair(QuatGroupsError, ValueError):
    pass


class NMismatch(QuatGroupsError, ValueError):
    pass


class NotInT(QuatGroupsError, ValueError):
    pass


class IncompatibleTable(QuatGroupsError, ValueError):
    pass


class InfiniteAbelianization(QuatGroupsError):
    """The abelianization has positive free rank, so the derived subgroup
    has infinite index and cannot be enumerated."""


class FactorizationMissing(QuatGroupsError):
    pass


class CountMismatch(QuatGroupsError):
    pass


class KernelNotGenerated(QuatGroupsError):
    """The relator values span a proper subgroup of <-1, p, l>."""


class CenterNotGenerated(QuatGroupsError):
    pass


class CommutingInput(QuatGroupsError, ValueError):
    pass


class ParseError(QuatGroupsError, ValueError):
    pass


class EnumerationOverflow(QuatGroupsError):
    """Raised where a coset enumeration must succeed but hit its limit."""

    def __init__(self, overflow, what: str = "coset enumeration"):
        super().__init__(f"{what} exceeded {overflow.limit} cosets")
        self.overflow = overflow
