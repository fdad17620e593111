"""Exception types raised by the swing-twist library."""


class SwingTwistError(ValueError):
    pass


class NonFinite(SwingTwistError):
    """A NaN or infinite coefficient reached a public operation."""


class ZeroVector(SwingTwistError):
    pass


class ZeroPinor(SwingTwistError):
    pass


class NonUnit(SwingTwistError):
    """A rotation operand (spinor or quaternion) is not unit within tolerance."""


class NonUnitSpinor(NonUnit):
    pass


class NonUnitQuaternion(NonUnit):
    pass


class NotABivector(SwingTwistError):
    pass


class LengthMismatch(SwingTwistError):
    pass


class AntipodalVectors(SwingTwistError):
    pass


class NotDecomposable(SwingTwistError):
    """The spinor sends the base vector to its negation; no swing-twist split exists."""


class DegenerateTwist(SwingTwistError):
    """A quaternion baseline would divide by (near) zero."""
