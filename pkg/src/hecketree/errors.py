"""Exception types shared across the package."""


class HecketreeError(Exception):
    pass


class PolyParseError(HecketreeError):
    """A level / polynomial string could not be parsed."""


class IndeterminatePrecision(HecketreeError):
    """A Laurent series operation needed coefficients beyond known precision."""


class BoundExceeded(HecketreeError):
    """A configured search bound (degree, enumeration size, depth) was hit."""


class NonTermination(HecketreeError):
    """Quotient exploration hit the depth cap before every branch was certified."""


class NonRational(HecketreeError):
    """A cyclotomic quantity expected to be rational has a nonzero zeta-part."""


class NonIntegral(HecketreeError):
    """An exact rational expected to be an integer is not."""


class NoStabilization(HecketreeError):
    """A saturation / escalation loop did not reach a fixed point."""


class NotSublattice(HecketreeError):
    """Claimed sublattice is not contained in the ambient lattice."""


class NotEquivariant(HecketreeError):
    """An operator does not satisfy the pairing-compatibility it needs."""
