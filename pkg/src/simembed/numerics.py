"""Dense tensor conventions, elementary kernels, seeded randomness, and the
finite-difference gradient oracle.

Tensors throughout simembed are C-contiguous (row-major) float64 numpy
arrays. All public operations return finite values for finite inputs.
"""

from __future__ import annotations

import hashlib
from typing import Callable

import numpy as np

from .errors import NumericError, ShapeError

#: Norms at or below this threshold are treated as zero by l2_normalize.
NORM_EPS = 1e-12


def as_tensor(values) -> np.ndarray:
    """Coerce to the canonical tensor layout: C-contiguous float64."""
    return np.ascontiguousarray(values, dtype=np.float64)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of a 2-d ``a`` by a 2-d ``b``."""
    a = as_tensor(a)
    b = as_tensor(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul expects 2-d operands, got {a.shape} x {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul inner dimensions disagree: {a.shape} x {b.shape}")
    return a @ b


def euclidean_distance(x: np.ndarray, y: np.ndarray) -> float:
    """L2 distance between two equal-length vectors."""
    x = as_tensor(x).reshape(-1)
    y = as_tensor(y).reshape(-1)
    if x.shape != y.shape:
        raise ShapeError(f"euclidean_distance length mismatch: {x.shape} vs {y.shape}")
    return float(np.sqrt(np.sum((x - y) ** 2)))


def l2_normalize(v: np.ndarray) -> np.ndarray:
    """Scale a vector to unit L2 norm.

    Vectors with norm <= NORM_EPS pass through unchanged so degenerate
    (e.g. dropout-zeroed) inputs never produce NaN.
    """
    v = as_tensor(v)
    norm = float(np.sqrt(np.sum(v * v)))
    if norm <= NORM_EPS:
        return v.copy()
    return v / norm


def finite_diff_grad(f: Callable[[np.ndarray], float], x: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    """Central-difference gradient of a scalar function, one coordinate at a time.

    ``f`` is called with a tensor that is perturbed in place and restored;
    it must not retain a reference between calls.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    x = as_tensor(x).copy()
    grad = np.zeros_like(x)
    flat_x = x.reshape(-1)
    flat_g = grad.reshape(-1)
    for i in range(flat_x.size):
        orig = flat_x[i]
        flat_x[i] = orig + eps
        f_plus = float(f(x))
        flat_x[i] = orig - eps
        f_minus = float(f(x))
        flat_x[i] = orig
        if not (np.isfinite(f_plus) and np.isfinite(f_minus)):
            raise NumericError(f"finite_diff_grad: non-finite objective at coordinate {i}")
        flat_g[i] = (f_plus - f_minus) / (2.0 * eps)
    return grad


class Rng:
    """Seeded random stream with deterministic labeled forking.

    Identical seeds give identical draw sequences across runs and
    platforms. ``fork(label)`` derives an independent child stream from
    (seed, label), so workers and epochs never share generator state.
    """

    __slots__ = ("seed", "gen")

    def __init__(self, seed: int):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed)))

    def fork(self, label: str) -> "Rng":
        digest = hashlib.sha256(f"{self.seed}:{label}".encode("utf-8")).digest()
        return Rng(int.from_bytes(digest[:8], "little"))

    # Thin pass-throughs so call sites read naturally.
    def uniform(self, low=0.0, high=1.0, size=None):
        return self.gen.uniform(low, high, size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self.gen.normal(loc, scale, size)

    def integers(self, low, high=None, size=None):
        return self.gen.integers(low, high, size)

    def permutation(self, n):
        return self.gen.permutation(n)

    def choice(self, n, size, replace=True):
        return self.gen.choice(n, size=size, replace=replace)

    def random(self, size=None):
        return self.gen.random(size)
