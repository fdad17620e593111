"""Quaternion swing-twist decomposers used as reference methods.

These are kept quaternion-native on purpose: nothing here goes through
the multivector code, so they are honest competitors in benchmarks and
independent oracles in tests.

Bridge convention (verified by the test suite)::

    i -> -e23,   j -> -e31,   k -> -e12

so ``w + x i + y j + z k`` maps to the spinor ``(a, b, c, d) = (w, -z, -x, -y)``.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .cl3 import EPS_UNIT, Spinor, Vector3, _require_finite
from .decomposition import EPS_DEC, Representation
from .errors import AntipodalVectors, DegenerateTwist, NonUnitQuaternion, NonUnitSpinor, ZeroVector


class Quaternion(NamedTuple):
    w: float = 1.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __mul__(self, o):
        return Quaternion(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)


class QuatSwingTwist(NamedTuple):
    swing: Quaternion
    twist: Quaternion
    rep: Representation

    def compose(self) -> Quaternion:
        if self.rep is Representation.SAT:
            return self.swing * self.twist
        return self.twist * self.swing


def _check_unit_quat(q: Quaternion) -> None:
    _require_finite(*q)
    if abs(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z - 1.0) > EPS_UNIT:
        raise NonUnitQuaternion(f"|q|^2 - 1 exceeds {EPS_UNIT}: {q!r}")


def quat_to_spinor(q: Quaternion) -> Spinor:
    _check_unit_quat(q)
    return Spinor(q.w, -q.z, -q.x, -q.y)


def spinor_to_quat(s: Spinor) -> Quaternion:
    _require_finite(*s)
    if abs(s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d - 1.0) > EPS_UNIT:
        raise NonUnitSpinor(f"|s|^2 - 1 exceeds {EPS_UNIT}: {s!r}")
    return Quaternion(s.a, -s.c, -s.d, -s.b)


def quat_rotate(q: Quaternion, v: Vector3) -> Vector3:
    """``q v q*`` with ``v`` embedded as a pure quaternion."""
    w, x, y, z = q
    # t = 2 (q_vec x v); v' = v + w t + q_vec x t
    tx = 2.0 * (y * v.z - z * v.y)
    ty = 2.0 * (z * v.x - x * v.z)
    tz = 2.0 * (x * v.y - y * v.x)
    return Vector3(
        v.x + w * tx + (y * tz - z * ty),
        v.y + w * ty + (z * tx - x * tz),
        v.z + w * tz + (x * ty - y * tx),
    )


def direct_method_decompose(q: Quaternion, v: Vector3) -> QuatSwingTwist:
    """Axis-angle swing from ``v`` to ``w = q v q*``, twist by inversion.

    Produces ``q = q_t q_s``; the twist turns about ``w``.  Parallel ``w``
    gives the identity swing, antipodal ``w`` is an error.
    """
    _check_unit_quat(q)
    _require_finite(*v)
    nv = math.sqrt(v.x * v.x + v.y * v.y + v.z * v.z)
    if nv <= 1e-12:
        raise ZeroVector(f"base vector {v!r} is zero")
    vx, vy, vz = v.x / nv, v.y / nv, v.z / nv
    wx, wy, wz = quat_rotate(q, Vector3(vx, vy, vz))
    cx, cy, cz = vy * wz - vz * wy, vz * wx - vx * wz, vx * wy - vy * wx
    sin_a = math.sqrt(cx * cx + cy * cy + cz * cz)
    cos_a = vx * wx + vy * wy + vz * wz
    if sin_a <= EPS_DEC:
        if cos_a < 0.0:
            raise AntipodalVectors(f"q sends {v!r} to its negation")
        return QuatSwingTwist(Quaternion(), q, Representation.TAS)
    alpha = math.atan2(sin_a, cos_a)
    h = 0.5 * alpha
    k = math.sin(h) / sin_a
    qs = Quaternion(math.cos(h), cx * k, cy * k, cz * k)
    return QuatSwingTwist(qs, q * qs.conjugate(), Representation.TAS)


def huyghe_z_decompose(q: Quaternion) -> QuatSwingTwist:
    """Closed-form split ``q = q_s q_t`` with the twist about the z axis."""
    _check_unit_quat(q)
    w, x, y, z = q
    r2 = w * w + z * z
    if r2 <= EPS_DEC * EPS_DEC:
        raise DegenerateTwist(f"w^2 + z^2 = {r2!r} for {q!r}")
    r = math.sqrt(r2)
    wt, zt = w / r, z / r
    qs = Quaternion(wt * w + zt * z, wt * x - zt * y, wt * y + zt * x, 0.0)
    return QuatSwingTwist(qs, Quaternion(wt, 0.0, 0.0, zt), Representation.SAT)


def huyghe_general_decompose(q: Quaternion, twist_axis: Vector3) -> QuatSwingTwist:
    """Projection split ``q = q_s q_t`` with the twist about ``twist_axis``."""
    _check_unit_quat(q)
    _require_finite(*twist_axis)
    n = math.sqrt(twist_axis.x ** 2 + twist_axis.y ** 2 + twist_axis.z ** 2)
    if n <= 1e-12:
        raise ZeroVector(f"twist axis {twist_axis!r} is zero")
    ux, uy, uz = twist_axis.x / n, twist_axis.y / n, twist_axis.z / n
    w = q.w
    t = q.x * ux + q.y * uy + q.z * uz
    norm = math.sqrt(w * w + t * t)
    if norm <= EPS_DEC:
        raise DegenerateTwist(f"projected quaternion vanishes for {q!r} about {twist_axis!r}")
    qt = Quaternion(w / norm, t * ux / norm, t * uy / norm, t * uz / norm)
    return QuatSwingTwist(q * qt.conjugate(), qt, Representation.SAT)
