"""Micro-benchmark of the spinor decomposition against the quaternion baselines.

All methods see the same pre-generated inputs.  Timing is taken per batch
(median and 95th percentile of per-decomposition latency over batches);
batches rotate the method order so no method always runs first.
"""
from __future__ import annotations

import csv
import gc
import hashlib
import io
import struct
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import sampling
from .baselines import direct_method_decompose, huyghe_general_decompose, quat_to_spinor
from .decomposition import decompose

METHODS = ("algorithm1", "direct", "huyghe_general")
CSV_COLUMNS = ("method", "median_ns", "p95_ns", "speedup_vs_direct")


@dataclass(frozen=True)
class BenchConfig:
    iters: int = 1_000_000
    seed: int = 0
    batch: int = 10_000
    warmup_batches: int = 2

    def validate(self) -> None:
        if self.iters < 1 or self.batch < 1 or self.warmup_batches < 0:
            raise ValueError(f"invalid benchmark config {self!r}")


@dataclass
class MethodTiming:
    method: str
    median_ns: float
    p95_ns: float
    speedup_vs_direct: float


@dataclass
class BenchReport:
    config: BenchConfig
    iterations: int
    input_digest: str
    methods: list

    def timing(self, method: str) -> MethodTiming:
        return next(m for m in self.methods if m.method == method)

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "iterations": self.iterations,
            "input_digest": self.input_digest,
            "methods": [asdict(m) for m in self.methods],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for m in self.methods:
            writer.writerow([m.method, f"{m.median_ns:.3f}", f"{m.p95_ns:.3f}", f"{m.speedup_vs_direct:.4f}"])
        return buf.getvalue()


def make_inputs(seed: int, count: int):
    """Identical input stream for every method: quaternions, their spinors, base vectors.

    Inputs within 1e-6 of the undecomposable set are dropped up front, so
    no method raises inside a timed loop.
    """
    quats, vecs = sampling.quaternion_stream(seed, count)
    q = np.asarray(quats)
    v = np.asarray(vecs)
    vhat = v / np.linalg.norm(v, axis=1, keepdims=True)
    # |q_p| for the projection onto v; zero exactly when q sends v to -v
    projected = np.hypot(q[:, 0], np.einsum("ij,ij->i", q[:, 1:], vhat))
    keep = np.flatnonzero(projected > 1e-6).tolist()
    if len(keep) != count:
        quats = [quats[i] for i in keep]
        vecs = [vecs[i] for i in keep]
    spinors = [quat_to_spinor(x) for x in quats]
    return quats, spinors, vecs


def input_digest(quats, vecs) -> str:
    h = hashlib.sha256()
    for q, v in zip(quats, vecs):
        h.update(struct.pack("<7d", *q, *v))
    return h.hexdigest()


def _time_batch(fn, xs, vs) -> int:
    t0 = time.perf_counter_ns()
    for x, v in zip(xs, vs):
        fn(x, v)
    return time.perf_counter_ns() - t0


def run_benchmark(config: BenchConfig = BenchConfig()) -> BenchReport:
    config.validate()
    quats, spinors, vecs = make_inputs(config.seed, config.iters)
    operands = {
        "algorithm1": (decompose, spinors),
        "direct": (direct_method_decompose, quats),
        "huyghe_general": (huyghe_general_decompose, quats),
    }
    starts = list(range(0, len(vecs), config.batch))
    samples = {m: [] for m in METHODS}

    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(config.warmup_batches):
            for method in METHODS:
                fn, xs = operands[method]
                _time_batch(fn, xs[: config.batch], vecs[: config.batch])
        for k, lo in enumerate(starts):
            hi = min(lo + config.batch, len(vecs))
            order = METHODS[k % 3:] + METHODS[: k % 3]
            for method in order:
                fn, xs = operands[method]
                samples[method].append(_time_batch(fn, xs[lo:hi], vecs[lo:hi]) / (hi - lo))
    finally:
        if gc_was_enabled:
            gc.enable()

    medians = {m: float(np.median(samples[m])) for m in METHODS}
    methods = [
        MethodTiming(
            method=m,
            median_ns=medians[m],
            p95_ns=float(np.percentile(samples[m], 95)),
            speedup_vs_direct=medians["direct"] / medians[m],
        )
        for m in METHODS
    ]
    return BenchReport(config=config, iterations=len(vecs), input_digest=input_digest(quats, vecs), methods=methods)
