"""Scalar exact arithmetic over a prime field, dual numbers, and dense matrices.

Field elements are plain Python ints in [0, p); dual numbers (for first-order
derivatives) are (primal, tangent) pairs with a nilpotent epsilon, eps^2 = 0.
Matrix code is written against a small ring protocol so the same routines run
over the field and over the dual ring.  Heavy batched work lives in
:mod:`soinv.batch`; this module is the readable single-point path and the one
used for dual-number Jacobian passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .batch import MERSENNE_31, MERSENNE_61, ModOps, sample_traceless_batch

DEFAULT_PRIME = MERSENNE_61
FAST_PRIME = MERSENNE_31

TWO_GENERIC = "two-generic"
TRANSPOSE_BOUND = "transpose-bound"

Matrix = list  # list of rows; entries are ring elements


class PrimeField:
    """Arithmetic context for F_p.  Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError(f"modulus must be >= 2, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of_int(self, k: int) -> int:
        return k % self.p

    def of_rational(self, q) -> int:
        q = Fraction(q)
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(
                f"coefficient denominator {q.denominator} divisible by p={self.p}; choose another prime"
            )
        return q.numerator * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def __repr__(self):
        return f"PrimeField({self.p})"


class DualRing:
    """F_p[eps]/(eps^2): elements are (primal, tangent) int pairs."""

    def __init__(self, base: PrimeField):
        self.base = base
        self.zero = (0, 0)
        self.one = (base.one, 0)

    def of_int(self, k: int):
        return (self.base.of_int(k), 0)

    def of_rational(self, q):
        return (self.base.of_rational(q), 0)

    def lift(self, primal: int, tangent: int = 0):
        return (primal % self.base.p, tangent % self.base.p)

    def add(self, a, b):
        p = self.base.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub(self, a, b):
        p = self.base.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def mul(self, a, b):
        p = self.base.p
        return (a[0] * b[0] % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def neg(self, a):
        p = self.base.p
        return ((-a[0]) % p, (-a[1]) % p)

    def __repr__(self):
        return f"DualRing({self.base.p})"


@dataclass(frozen=True)
class EvaluationContext:
    """Matrix order, prime modulus, master seed and substitution mode."""

    n: int
    p: int = DEFAULT_PRIME
    seed: int = 42
    mode: str = TWO_GENERIC

    def __post_init__(self):
        if self.mode not in (TWO_GENERIC, TRANSPOSE_BOUND):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def ops(self) -> ModOps:
        return ModOps(self.p)


@dataclass(frozen=True)
class SamplePoint:
    """A pair of traceless matrices; in transpose-bound mode y = x^T."""

    x: tuple
    y: tuple
    mode: str

    @property
    def n(self) -> int:
        return len(self.x)


# ---------------------------------------------------------------------------
# dense matrix helpers (ring-generic, list-of-lists)

def mat_identity(n: int, ring) -> Matrix:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_transpose(m: Sequence) -> Matrix:
    return [list(row) for row in zip(*m)]


def mat_add(a: Sequence, b: Sequence, ring) -> Matrix:
    return [[ring.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Sequence, b: Sequence, ring) -> Matrix:
    return [[ring.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m: Sequence, ring) -> Matrix:
    return [[ring.mul(c, x) for x in row] for row in m]


def mat_mul(a: Sequence, b: Sequence, ring) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = mat_transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = ring.zero
            for x, y in zip(row, col):
                acc = ring.add(acc, ring.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_trace(m: Sequence, ring):
    acc = ring.zero
    for i in range(len(m)):
        acc = ring.add(acc, m[i][i])
    return acc


def rank_mod_p(m, p: int) -> int:
    """Rank over F_p.  Accepts numpy arrays or nested sequences of ints."""
    a = np.asarray(m, dtype=object) if not isinstance(m, np.ndarray) else m
    if a.size == 0:
        return 0
    return ModOps(p).rank(a)


def det_mod_p(m, p: int) -> int:
    """Determinant over F_p by elimination (independent of pfaffian code)."""
    a = [[int(x) % p for x in row] for row in m]
    n = len(a)
    det = 1 % p
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] % p != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det % p
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det


def mat_inv_mod_p(m, p: int) -> Matrix:
    """Inverse over F_p via Gauss-Jordan.  Raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[int(x) % p for x in row] + [1 % p if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix not invertible mod p")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [x * inv % p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------------------
# sampling

def _freeze(rows) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in rows)


def sample_points(ctx: EvaluationContext, count: int, stream: int = 0) -> list[SamplePoint]:
    """Deterministic sample points for the context (seed + stream partitioned).

    In two-generic mode x and y are independent uniform traceless matrices;
    in transpose-bound mode y is x^T entrywise.
    """
    if ctx.n < 2:
        raise ValueError("matrix order must be >= 2")
    xs = sample_traceless_batch(ctx.n, count, ctx.p, ctx.seed, stream=2 * stream)
    if ctx.mode == TWO_GENERIC:
        ys = sample_traceless_batch(ctx.n, count, ctx.p, ctx.seed, stream=2 * stream + 1)
    else:
        ys = np.swapaxes(xs, -1, -2)
    return [SamplePoint(_freeze(xs[i]), _freeze(ys[i]), ctx.mode) for i in range(count)]


def random_traceless(n: int, ctx: EvaluationContext, stream: int = 0) -> SamplePoint:
    """First point of the deterministic stream for this context."""
    ctx = EvaluationContext(n, ctx.p, ctx.seed, ctx.mode)
    return sample_points(ctx, 1, stream=stream)[0]


def cayley_special_orthogonal(n: int, ctx: EvaluationContext, stream: int = 0, retries: int = 100) -> Matrix:
    """Random element of SO_n(F_p) via the Cayley transform.

    Q = (I - S)(I + S)^{-1} for random skew-symmetric S with I + S invertible;
    such Q satisfy Q^T Q = I and det Q = 1.  Singular draws are resampled up
    to the retry limit.
    """
    p = ctx.p
    rng = np.random.default_rng([int(ctx.seed), 777, int(stream)])
    ring = PrimeField(p)
    for _ in range(retries):
        s = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = int(rng.integers(0, p))
                s[i][j] = v
                s[j][i] = (-v) % p
        eye = mat_identity(n, ring)
        try:
            inv = mat_inv_mod_p(mat_add(eye, s, ring), p)
        except ZeroDivisionError:
            continue
        return mat_mul(mat_sub(eye, s, ring), inv, ring)
    raise RuntimeError(f"no invertible I+S found after {retries} draws (p={p})")
