"""Exception taxonomy shared by all loopsmith modules."""


class LoopError(Exception):
    """Base class for all loopsmith errors."""


class TableFormatError(LoopError):
    """A Cayley table failed structural validation."""


class NotSquareError(TableFormatError):
    """Ragged input or row/column count mismatch."""


class OutOfRangeError(TableFormatError):
    """Table entry outside 0..n-1."""


class NotLatinError(TableFormatError):
    """Repeated entry in a row or column."""


class NoIdentityError(TableFormatError):
    """Row 0 or column 0 is not the identity permutation."""


class UnsupportedOrderError(TableFormatError):
    """Order exceeds the supported maximum (255)."""


class IdentityParseError(LoopError):
    """Malformed identity expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownPropertyError(LoopError):
    """check_property was asked for an unrecognized property name."""


class NotPowerAssociativeError(LoopError):
    """Operation requires power associativity but some monogenic subloop is not a group."""


class NotASubloopError(LoopError):
    """The given element set is not closed under product and divisions."""


class NotNormalError(LoopError):
    """Quotient construction requires a normal subloop."""


class IllDefinedQuotientError(LoopError):
    """Representative products landed in different cosets (normality bug upstream)."""


class InadmissibleOrderError(LoopError):
    """No Steiner triple system exists for this point count."""


class InvalidFactorSetError(LoopError):
    """Factor-set data violates its structural invariants."""


class AlphaOrderTooSmallError(InvalidFactorSetError):
    """The chosen element must have order greater than 2 in the abelian group."""


class UnknownNameError(LoopError):
    """standard_loop was asked for an unrecognized loop name."""


class UnknownFixtureError(LoopError):
    """No bundled table is registered under this name."""


class DecompositionFailsError(LoopError):
    """Torsion decomposition did not satisfy the internal-direct-product conditions."""
