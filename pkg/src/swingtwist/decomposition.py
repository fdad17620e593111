"""Swing-twist decomposition of Cl(3,0) spinors.

A spinor ``s`` and a non-zero base vector ``v`` split into a swing ``p``
(bivector dual perpendicular to ``v``) and a twist ``q`` (bivector dual
parallel to ``v``), either as ``s = p q`` (swing after twist) or as
``s = q p`` (twist after swing).

The twist is the normalized pinor ``a |v|^2 + e123 v (v . *[s]_2)``.
Its computation needs one square root and no trigonometry.
"""
from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .cl3 import (
    EPS_UNIT,
    Spinor,
    Vector3,
    _require_finite,
    check_unit,
    exp_axis_twist,
)
from .errors import AntipodalVectors, LengthMismatch, NotDecomposable, ZeroVector

EPS_DEC = 1e-9
_TWO_PI = 2.0 * math.pi


class Representation(enum.Enum):
    SAT = "sat"  # s = p q, twist first
    TAS = "tas"  # s = q p, twist last

    @classmethod
    def parse(cls, value) -> "Representation":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


class SwingTwist(NamedTuple):
    swing: Spinor
    twist: Spinor
    rep: Representation

    def compose(self) -> Spinor:
        if self.rep is Representation.SAT:
            return self.swing * self.twist
        return self.twist * self.swing


class TwistScalars(NamedTuple):
    k: float
    l: float
    u: float
    n: float
    m: float
    lnorm: float


def canonical(s: Spinor) -> Spinor:
    """Pick the member of ``{s, -s}`` with non-negative scalar part.

    A zero scalar part is resolved by the first non-zero bivector
    coefficient in (e12, e23, e31) order, which is made positive.
    """
    a, b, c, d = s
    if a > 0.0:
        return s
    if a < 0.0:
        return Spinor(-a, -b, -c, -d)
    for coeff in (b, c, d):
        if coeff > 0.0:
            return s
        if coeff < 0.0:
            return Spinor(-a, -b, -c, -d)
    return s


def _checked_norm2(v: Vector3) -> float:
    _require_finite(*v)
    n = v.x * v.x + v.y * v.y + v.z * v.z
    # |v| <= 1e-12 * max(1, |v|) only happens for |v| <= 1e-12
    if n <= 1e-24:
        raise ZeroVector(f"base vector {v!r} is zero")
    return n


def invariant_twist(v: Vector3, alpha: float) -> Spinor:
    """Spinor ``exp(e123 alpha N(v))``, which leaves ``v`` fixed."""
    _require_finite(alpha)
    return exp_axis_twist(v, alpha % _TWO_PI)


def direct_rotation(v: Vector3, w: Vector3) -> Spinor:
    """Shortest-arc spinor ``N(v + w) N(v)`` taking ``v`` onto ``w``."""
    nv = math.sqrt(_checked_norm2(v))
    nw = math.sqrt(_checked_norm2(w))
    if abs(nv - nw) > EPS_UNIT * nv:
        raise LengthMismatch(f"|v| = {nv!r} but |w| = {nw!r}")
    h = Vector3(v.x + w.x, v.y + w.y, v.z + w.z)
    nh = math.sqrt(h.x * h.x + h.y * h.y + h.z * h.z)
    if nh <= EPS_UNIT * nv:
        raise AntipodalVectors(f"w = -v (|v + w| = {nh!r})")
    k = 1.0 / (nh * nv)
    # (v + w) v = (v + w).v + (v + w)^v
    return Spinor(
        (h.x * v.x + h.y * v.y + h.z * v.z) * k,
        (h.x * v.y - h.y * v.x) * k,
        (h.y * v.z - h.z * v.y) * k,
        (h.z * v.x - h.x * v.z) * k,
    )


def rotation_set(v: Vector3, w: Vector3, alpha: float, rep=Representation.SAT) -> Spinor:
    """Member of the one-parameter family of spinors taking ``v`` onto ``w``."""
    rep = Representation.parse(rep)
    swing = direct_rotation(v, w)
    if rep is Representation.SAT:
        return swing * invariant_twist(v, alpha)
    return invariant_twist(w, alpha) * swing


def twist_scalars(s: Spinor, v: Vector3) -> TwistScalars:
    n = _checked_norm2(v)
    _require_finite(*s)
    a, b, c, d = s
    u = v.x * c + v.y * d + v.z * b
    m = a * n
    lnorm = math.sqrt(m * m + u * u * n)
    if lnorm <= EPS_DEC * n:
        raise NotDecomposable(f"{s!r} sends {v!r} to its negation")
    return TwistScalars(m / lnorm, u * math.sqrt(n) / lnorm, u, n, m, lnorm)


def _twist(s: Spinor, v: Vector3) -> Spinor:
    a, b, c, d = s
    x, y, z = v
    n = x * x + y * y + z * z
    if n <= 1e-24:
        raise ZeroVector(f"base vector {v!r} is zero")
    u = x * c + y * d + z * b
    m = a * n
    l = math.sqrt(m * m + u * u * n)
    if l <= EPS_DEC * n:
        raise NotDecomposable(f"{s!r} sends {v!r} to its negation")
    if m < 0.0 or (m == 0.0 and (z * u or x * u or y * u) < 0.0):
        l = -l
    ul = u / l
    return Spinor(m / l, z * ul, x * ul, y * ul)


def twist_projection(v: Vector3, s: Spinor) -> Spinor:
    """Twist factor of ``s`` about ``v``, sign-canonical."""
    check_unit(s)
    _require_finite(*v)
    return _twist(s, v)


def decompose(s: Spinor, v: Vector3, rep=Representation.SAT) -> SwingTwist:
    if rep.__class__ is not Representation:
        rep = Representation.parse(rep)
    check_unit(s)
    _require_finite(*v)
    q = _twist(s, v)
    qa, qb, qc, qd = q
    a, b, c, d = s
    if rep is Representation.SAT:
        # p = s q~
        p = Spinor(
            a * qa + b * qb + c * qc + d * qd,
            b * qa - a * qb + c * qd - d * qc,
            c * qa - a * qc - b * qd + d * qb,
            d * qa - a * qd + b * qc - c * qb,
        )
    else:
        # p = q~ s
        p = Spinor(
            qa * a + qb * b + qc * c + qd * d,
            qa * b - qb * a + qc * d - qd * c,
            qa * c - qc * a - qb * d + qd * b,
            qa * d - qd * a + qb * c - qc * b,
        )
    return SwingTwist(p, q, rep)


def is_decomposable(s: Spinor, v: Vector3) -> bool:
    n = _checked_norm2(v)
    _require_finite(*s)
    nv = math.sqrt(n)
    u = v.x * s.c + v.y * s.d + v.z * s.b
    return not (abs(s.a) <= EPS_DEC and abs(u) <= EPS_DEC * nv)
