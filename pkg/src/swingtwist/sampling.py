"""Seeded random inputs for validation campaigns and benchmarks."""
from __future__ import annotations

import math

import numpy as np

from .baselines import Quaternion
from .cl3 import Spinor, Vector3

DEFAULT_LENGTH_RANGE = (0.1, 10.0)
NEAR_DEGENERATE_SCALARS = (0.0, 1e-13, 1e-7)


def make_rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def trial_seed(seed: int, index: int) -> int:
    """Independent 64-bit seed for trial ``index`` of a campaign."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def _unit4(rng: np.random.Generator):
    while True:
        a, b, c, d = rng.standard_normal(4).tolist()
        n = math.sqrt(a * a + b * b + c * c + d * d)
        if n > 1e-6:
            return a / n, b / n, c / n, d / n


def random_unit_spinor(rng: np.random.Generator) -> Spinor:
    return Spinor(*_unit4(rng))


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*_unit4(rng))


def random_direction(rng: np.random.Generator) -> Vector3:
    while True:
        x, y, z = rng.standard_normal(3).tolist()
        n = math.sqrt(x * x + y * y + z * z)
        if n > 1e-6:
            return Vector3(x / n, y / n, z / n)


def random_vector(rng: np.random.Generator, length_range=DEFAULT_LENGTH_RANGE) -> Vector3:
    """Uniform direction, length log-uniform in ``length_range``."""
    lo, hi = length_range
    if not 0.0 < lo <= hi:
        raise ValueError(f"bad length range {length_range!r}")
    d = random_direction(rng)
    t = rng.random()
    length = lo if lo == hi else math.exp(math.log(lo) + t * (math.log(hi) - math.log(lo)))
    return Vector3(d.x * length, d.y * length, d.z * length)


def near_degenerate_spinor(rng: np.random.Generator, v: Vector3, scalar: float) -> Spinor:
    """Spinor ``scalar + sqrt(1 - scalar^2) B`` whose bivector dual is perpendicular to ``v``."""
    d = random_direction(rng)
    n2 = v.x * v.x + v.y * v.y + v.z * v.z
    k = (d.x * v.x + d.y * v.y + d.z * v.z) / n2
    px, py, pz = d.x - k * v.x, d.y - k * v.y, d.z - k * v.z
    pn = math.sqrt(px * px + py * py + pz * pz)
    if pn < 1e-6:
        # d happened to be parallel to v
        return near_degenerate_spinor(rng, v, scalar)
    r = math.sqrt(1.0 - scalar * scalar) / pn
    # dual (c, d, b) = (px, py, pz) * r
    return Spinor(scalar, pz * r, px * r, py * r)


def quaternion_stream(seed: int, count: int):
    """``count`` unit quaternions and unit-free vectors drawn in one vectorized pass."""
    rng = make_rng(seed)
    q = rng.standard_normal((count, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    dirs = rng.standard_normal((count, 3))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    lo, hi = DEFAULT_LENGTH_RANGE
    lengths = np.exp(rng.uniform(math.log(lo), math.log(hi), size=count))
    vecs = dirs * lengths[:, None]
    return (
        [Quaternion(*row) for row in q.tolist()],
        [Vector3(*row) for row in vecs.tolist()],
    )
