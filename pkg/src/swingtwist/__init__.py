"""Swing-twist decomposition of rotations in the Clifford algebra Cl(3,0)."""
from .baselines import (
    QuatSwingTwist,
    Quaternion,
    direct_method_decompose,
    huyghe_general_decompose,
    huyghe_z_decompose,
    quat_rotate,
    quat_to_spinor,
    spinor_to_quat,
)
from .cl3 import (
    Multivector,
    Pinor,
    Spinor,
    Vector3,
    dual,
    exp_axis_twist,
    geometric_product,
    grade,
    hodge_star_bivector,
    normalize_pinor,
    normalize_vector,
    reverse,
    rotate,
)
from .decomposition import (
    Representation,
    SwingTwist,
    TwistScalars,
    canonical,
    decompose,
    direct_rotation,
    invariant_twist,
    is_decomposable,
    rotation_set,
    twist_projection,
    twist_scalars,
)
from .errors import (
    AntipodalVectors,
    DegenerateTwist,
    LengthMismatch,
    NonFinite,
    NonUnit,
    NonUnitQuaternion,
    NonUnitSpinor,
    NotABivector,
    NotDecomposable,
    SwingTwistError,
    ZeroPinor,
    ZeroVector,
)

__version__ = "0.1.0"
