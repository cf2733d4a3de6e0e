"""Vectorized arithmetic mod p on int64 numpy arrays.

Three strategies, chosen by the modulus:

* ``small``    -- p < 2^31: a*b fits in int64, reduce with a single ``%``.
* ``m61``      -- p = 2^61 - 1: Mersenne multiply via 31-bit limb splitting,
                  never leaving int64.
* ``object``   -- any other prime: numpy object arrays holding Python ints
                  (correct but slow; large primes other than 2^61-1 are not
                  a performance target).

All public entry points go through :class:`ModOps` so callers never need to
know which strategy is active.
"""

from __future__ import annotations

import numpy as np

MERSENNE_31 = (1 << 31) - 1
MERSENNE_61 = (1 << 61) - 1

_SMALL_LIMIT = 1 << 31  # (p-1)^2 + p must stay below 2^63

_MASK31 = (1 << 31) - 1
_MASK30 = (1 << 30) - 1


def _mulmod61(a, b):
    """(a * b) mod 2^61-1 for int64 arrays with entries in [0, 2^61-1)."""
    a1 = a >> 31
    a0 = a & _MASK31
    b1 = b >> 31
    b0 = b & _MASK31
    # a*b = a1*b1*2^62 + (a1*b0 + a0*b1)*2^31 + a0*b0, and 2^61 == 1 (mod p)
    t = 2 * (a1 * b1)
    mid = a1 * b0 + a0 * b1
    t += (mid >> 30) + ((mid & _MASK30) << 31)
    t = (t >> 61) + (t & MERSENNE_61)
    t += a0 * b0
    t = (t >> 61) + (t & MERSENNE_61)
    t = (t >> 61) + (t & MERSENNE_61)
    return np.where(t >= MERSENNE_61, t - MERSENNE_61, t)


class ModOps:
    """Elementwise and batched-matrix operations mod a fixed prime."""

    def __init__(self, p: int, strategy: str = None):
        if p < 2:
            raise ValueError(f"modulus must be >= 2, got {p}")
        self.p = p
        if strategy is None:
            if p < _SMALL_LIMIT:
                strategy = "small"
            elif p == MERSENNE_61:
                strategy = "m61"
            else:
                strategy = "object"
        elif strategy not in ("small", "m61", "object"):
            raise ValueError(f"unknown strategy {strategy!r}")
        elif strategy == "small" and p >= _SMALL_LIMIT:
            raise ValueError("small strategy requires p < 2^31")
        elif strategy == "m61" and p != MERSENNE_61:
            raise ValueError("m61 strategy requires p = 2^61 - 1")
        self.strategy = strategy

    @property
    def dtype(self):
        return object if self.strategy == "object" else np.int64

    def asarray(self, a) -> np.ndarray:
        return np.asarray(a, dtype=self.dtype) % self.p

    def zeros(self, shape) -> np.ndarray:
        if self.strategy == "object":
            out = np.empty(shape, dtype=object)
            out[...] = 0
            return out
        return np.zeros(shape, dtype=np.int64)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        if self.strategy == "m61":
            return _mulmod61(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return (a * b) % self.p

    def pow(self, a, e: int):
        """Elementwise a**e mod p by binary exponentiation."""
        if e < 0:
            raise ValueError("negative exponent")
        result = None
        base = np.asarray(a, dtype=self.dtype)
        while e:
            if e & 1:
                result = base.copy() if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        if result is None:
            out = np.ones_like(np.asarray(a, dtype=self.dtype))
            return out
        return result

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Batched matrix product: (..., n, k) @ (..., k, m)."""
        k = a.shape[-1]
        if b.shape[-2] != k:
            raise ValueError(f"inner dimensions disagree: {a.shape} @ {b.shape}")
        acc = self.mul(a[..., :, 0:1], b[..., 0:1, :])
        for i in range(1, k):
            acc = self.add(acc, self.mul(a[..., :, i : i + 1], b[..., i : i + 1, :]))
        return acc

    def trace(self, m: np.ndarray):
        """Batched trace of (..., n, n)."""
        diag = np.diagonal(m, axis1=-2, axis2=-1)
        acc = diag[..., 0]
        for i in range(1, diag.shape[-1]):
            acc = self.add(acc, diag[..., i])
        return acc

    def transpose(self, m: np.ndarray) -> np.ndarray:
        return np.swapaxes(m, -1, -2)

    def pfaffian4(self, m: np.ndarray):
        """Batched pfaffian of skew-symmetric (..., 4, 4) matrices."""
        t1 = self.mul(m[..., 0, 1], m[..., 2, 3])
        t2 = self.mul(m[..., 0, 2], m[..., 1, 3])
        t3 = self.mul(m[..., 0, 3], m[..., 1, 2])
        return self.sub(self.add(t1, t3), t2)

    def inv_scalar(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero mod p")
        return pow(a, -1, self.p)

    def rank(self, mat: np.ndarray) -> int:
        """Rank over F_p by in-place Gaussian elimination with partial pivoting."""
        a = np.array(mat, dtype=self.dtype, copy=True) % self.p
        if a.ndim != 2:
            raise ValueError("rank expects a 2-d matrix")
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                a[[r, piv], :] = a[[piv, r], :]
            inv = self.inv_scalar(int(a[r, c]))
            a[r, c:] = self.mul(a[r, c:], inv)
            if r + 1 < rows:
                col = a[r + 1 :, c]
                a[r + 1 :, c:] = self.sub(a[r + 1 :, c:], self.mul(col[:, None], a[r, c:][None, :]))
            r += 1
        return r


def sample_traceless_batch(n: int, count: int, p: int, seed, stream: int = 0) -> np.ndarray:
    """Deterministic batch of uniform traceless n x n matrices over F_p.

    Off-diagonal entries and the first n-1 diagonal entries are uniform;
    the last diagonal entry closes the trace to zero.  The stream index
    partitions the seed so independent batches never share randomness.
    """
    rng = np.random.default_rng([int(seed), int(stream)])
    x = rng.integers(0, p, size=(count, n, n), dtype=np.int64)
    diag = np.diagonal(x, axis1=-2, axis2=-1)
    head = np.zeros(count, dtype=np.int64)
    for i in range(n - 1):  # stepwise reduction keeps the sum inside int64
        head = (head + diag[..., i]) % p
    x[:, n - 1, n - 1] = (-head) % p
    return x
