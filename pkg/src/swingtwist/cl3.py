"""Arithmetic in the Clifford algebra Cl(3,0).

Multivector coefficients are stored in the blade order

    1, e1, e2, e3, e12, e23, e31, e123

and spinors keep the bivector order (e12, e23, e31), so a spinor
``Spinor(a, b, c, d)`` is ``a + b e12 + c e23 + d e31``.

All value types are immutable tuples and every function is pure.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Union

from .errors import NonFinite, NonUnitSpinor, NotABivector, ZeroPinor, ZeroVector

EPS_UNIT = 1e-9
EPS_LEN = 1e-12
EPS_NUM = 1e-12


def _require_finite(*values: float) -> None:
    if not math.isfinite(sum(values)) and not all(map(math.isfinite, values)):
        raise NonFinite(f"non-finite coefficient in {values!r}")


class Multivector(NamedTuple):
    s: float = 0.0
    v1: float = 0.0
    v2: float = 0.0
    v3: float = 0.0
    b12: float = 0.0
    b23: float = 0.0
    b31: float = 0.0
    t: float = 0.0

    def __add__(self, other):
        return Multivector(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return Multivector(*(x - y for x, y in zip(self, other)))

    def __neg__(self):
        return Multivector(*(-x for x in self))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(*(x * other for x in self))

    def __rmul__(self, other):
        return Multivector(*(other * x for x in self))

    def __invert__(self):
        return reverse(self)


class Vector3(NamedTuple):
    x: float
    y: float
    z: float

    def __add__(self, other):
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, k):
        return Vector3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def dot(self, other) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other) -> "Vector3":
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


class Spinor(NamedTuple):
    """Unit even element ``a + b e12 + c e23 + d e31``."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __mul__(self, other):
        return spinor_product(self, other)

    def __neg__(self):
        return Spinor(-self.a, -self.b, -self.c, -self.d)

    def __invert__(self):
        return Spinor(self.a, -self.b, -self.c, -self.d)

    def norm2(self) -> float:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d


class Pinor(NamedTuple):
    """Even element with the same layout as :class:`Spinor`, not necessarily unit."""

    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0


Element = Union[Multivector, Vector3, Spinor, Pinor]


def to_multivector(x: Element) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, Vector3):
        return Multivector(0.0, x.x, x.y, x.z)
    if isinstance(x, (Spinor, Pinor)):
        return Multivector(x.a, 0.0, 0.0, 0.0, x.b, x.c, x.d, 0.0)
    if isinstance(x, (int, float)):
        return Multivector(float(x))
    raise TypeError(f"cannot embed {type(x).__name__} in Cl(3,0)")


def geometric_product(lhs: Multivector, rhs: Multivector) -> Multivector:
    x, y = to_multivector(lhs), to_multivector(rhs)
    _require_finite(*x, *y)
    return Multivector(
        x.s * y.s + x.v1 * y.v1 + x.v2 * y.v2 + x.v3 * y.v3
        - x.b12 * y.b12 - x.b23 * y.b23 - x.b31 * y.b31 - x.t * y.t,
        x.s * y.v1 + x.v1 * y.s - x.v2 * y.b12 + x.v3 * y.b31
        + x.b12 * y.v2 - x.b23 * y.t - x.b31 * y.v3 - x.t * y.b23,
        x.s * y.v2 + x.v1 * y.b12 + x.v2 * y.s - x.v3 * y.b23
        - x.b12 * y.v1 + x.b23 * y.v3 - x.b31 * y.t - x.t * y.b31,
        x.s * y.v3 - x.v1 * y.b31 + x.v2 * y.b23 + x.v3 * y.s
        - x.b12 * y.t - x.b23 * y.v2 + x.b31 * y.v1 - x.t * y.b12,
        x.s * y.b12 + x.v1 * y.v2 - x.v2 * y.v1 + x.v3 * y.t
        + x.b12 * y.s - x.b23 * y.b31 + x.b31 * y.b23 + x.t * y.v3,
        x.s * y.b23 + x.v1 * y.t + x.v2 * y.v3 - x.v3 * y.v2
        + x.b12 * y.b31 + x.b23 * y.s - x.b31 * y.b12 + x.t * y.v1,
        x.s * y.b31 - x.v1 * y.v3 + x.v2 * y.t + x.v3 * y.v1
        - x.b12 * y.b23 + x.b23 * y.b12 + x.b31 * y.s + x.t * y.v2,
        x.s * y.t + x.v1 * y.b23 + x.v2 * y.b31 + x.v3 * y.b12
        + x.b12 * y.v3 + x.b23 * y.v1 + x.b31 * y.v2 + x.t * y.s,
    )


def spinor_product(p: Spinor, q: Spinor) -> Spinor:
    """Geometric product restricted to the even subalgebra."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return Spinor(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 - c1 * d2 + d1 * c2,
        a1 * c2 + c1 * a2 + b1 * d2 - d1 * b2,
        a1 * d2 + d1 * a2 - b1 * c2 + c1 * b2,
    )


def reverse(m: Multivector) -> Multivector:
    m = to_multivector(m)
    return Multivector(m.s, m.v1, m.v2, m.v3, -m.b12, -m.b23, -m.b31, -m.t)


_GRADE_SLOTS = {0: (0,), 1: (1, 2, 3), 2: (4, 5, 6), 3: (7,)}


def grade(m: Multivector, k: int) -> Multivector:
    if k not in _GRADE_SLOTS:
        raise ValueError(f"grade must be 0..3, got {k}")
    keep = _GRADE_SLOTS[k]
    return Multivector(*(c if i in keep else 0.0 for i, c in enumerate(to_multivector(m))))


def hodge_star_bivector(bivector: Multivector) -> Vector3:
    """Dual ``-e123 B`` of a pure bivector, as a vector."""
    m = to_multivector(bivector)
    if m.s or m.v1 or m.v2 or m.v3 or m.t:
        raise NotABivector(f"expected grade-2 content only, got {m!r}")
    _require_finite(m.b12, m.b23, m.b31)
    return Vector3(m.b23, m.b31, m.b12)


def dual(s: Spinor) -> Vector3:
    """Dual of the bivector part of a spinor: ``c e1 + d e2 + b e3``."""
    return Vector3(s.c, s.d, s.b)


def _length_floor(length: float) -> float:
    return EPS_LEN * max(1.0, length)


def normalize_vector(v: Vector3) -> Vector3:
    _require_finite(*v)
    length = math.sqrt(v.x * v.x + v.y * v.y + v.z * v.z)
    if length <= _length_floor(length):
        raise ZeroVector(f"cannot normalize {v!r}")
    return Vector3(v.x / length, v.y / length, v.z / length)


def normalize_pinor(p: Pinor) -> Spinor:
    _require_finite(*p)
    norm = math.sqrt(p.a * p.a + p.b * p.b + p.c * p.c + p.d * p.d)
    if norm <= _length_floor(norm):
        raise ZeroPinor(f"cannot normalize {p!r}")
    return Spinor(p.a / norm, p.b / norm, p.c / norm, p.d / norm)


def exp_axis_twist(v: Vector3, alpha: float) -> Spinor:
    """``exp(e123 alpha N(v)) = cos(alpha) + sin(alpha) e123 N(v)``."""
    x, y, z = normalize_vector(v)
    _require_finite(alpha)
    ca, sa = math.cos(alpha), math.sin(alpha)
    # e123 e1 = e23, e123 e2 = e31, e123 e3 = e12
    return Spinor(ca, sa * z, sa * x, sa * y)


def check_unit(s: Spinor) -> None:
    _require_finite(*s)
    if abs(s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d - 1.0) > EPS_UNIT:
        raise NonUnitSpinor(f"|s|^2 - 1 exceeds {EPS_UNIT}: {s!r}")


def rotate_coordinates(s: Spinor, v: Vector3) -> Vector3:
    """Closed-form ``s v s^-1`` in spinor coordinates (no validation)."""
    a, b, c, d = s
    x, y, z = v
    aa, bb, cc, dd = a * a, b * b, c * c, d * d
    return Vector3(
        (aa - bb + cc - dd) * x + 2.0 * y * (a * b + c * d) + 2.0 * z * (b * c - a * d),
        (aa - bb - cc + dd) * y + 2.0 * x * (c * d - a * b) + 2.0 * z * (b * d + a * c),
        (aa + bb - cc - dd) * z + 2.0 * x * (b * c + a * d) + 2.0 * y * (b * d - a * c),
    )


def rotate_sandwich(s: Spinor, v: Vector3) -> Vector3:
    """``s v s~`` evaluated with two full geometric products."""
    sm = to_multivector(s)
    r = geometric_product(geometric_product(sm, to_multivector(v)), reverse(sm))
    return Vector3(r.v1, r.v2, r.v3)


def rotate(s: Spinor, v: Vector3, *, cross_check: bool = False) -> Vector3:
    check_unit(s)
    _require_finite(*v)
    out = rotate_coordinates(s, v)
    if cross_check:
        alt = rotate_sandwich(s, v)
        tol = EPS_NUM * max(1.0, math.sqrt(v.x * v.x + v.y * v.y + v.z * v.z))
        if max(abs(p - q) for p, q in zip(out, alt)) > tol:
            raise ArithmeticError(f"sandwich {alt!r} and coordinate {out!r} rotations disagree")
    return out
