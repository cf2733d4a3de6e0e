"""Graded-dimension computation, membership/minimality certificates, Jacobian
ranks, polynomial-identity verification and Hironaka (free module) checks.

Everything here is probabilistic linear algebra over a large prime field:
generator values are sampled at random traceless matrices, monomials in the
generators become columns of an evaluation matrix, and ranks of those
matrices certify dimensions.  Rank separations are sound certificates
(a target provably outside a span); rank equalities are probabilistic
membership verdicts with Schwartz-Zippel failure probability about
degree/p per sample point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .batch import ModOps, sample_traceless_batch
from .modular import (
    TRANSPOSE_BOUND,
    TWO_GENERIC,
    DualRing,
    EvaluationContext,
    PrimeField,
    rank_mod_p,
)
from .words import InvariantExpression, evaluate_invariant_batch, evaluate_invariant_matrices

POINT_SURPLUS = 8

CERTIFIED_INDEPENDENT = "certified-independent"
PROBABLY_MEMBER = "probably-member"

# stream bases partition the master seed between unrelated sampling tasks
_STREAM_DIMS = 0
_STREAM_MEMBER = 100
_STREAM_JACOBIAN = 200
_STREAM_IDENTITY = 300
_STREAM_REPAIR = 400


@dataclass(frozen=True)
class Generator:
    label: str
    expr: InvariantExpression
    degree: int
    bidegree: tuple = None


@dataclass(frozen=True)
class GeneratorSet:
    """Named homogeneous generators with an evaluation mode and matrix order."""

    name: str
    generators: tuple
    mode: str
    n: int

    def __post_init__(self):
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in generator set {self.name}")
        for g in self.generators:
            if g.degree is None:
                raise ValueError(f"generator {g.label} in {self.name} is not homogeneous")

    @property
    def labels(self):
        return [g.label for g in self.generators]

    @property
    def degree_map(self) -> dict:
        return {g.label: g.degree for g in self.generators}

    def by_label(self, label: str) -> Generator:
        for g in self.generators:
            if g.label == label:
                return g
        raise KeyError(label)

    def without(self, label: str) -> "GeneratorSet":
        return GeneratorSet(
            f"{self.name}-minus-{label}",
            tuple(g for g in self.generators if g.label != label),
            self.mode,
            self.n,
        )

    def grading(self, g: Generator, bigraded: bool):
        if not bigraded:
            return g.degree
        if g.bidegree is None:
            raise ValueError(f"generator {g.label} has no bidegree; bigraded request rejected")
        return g.bidegree


def enumerate_monomials(gs: GeneratorSet, target):
    """All generator monomials of exactly the target (bi)degree.

    Deterministic DFS over generators in set order, exponent descending,
    with degree-sum pruning.  A monomial is a tuple of (generator index,
    exponent) pairs with positive exponents.
    """
    bigraded = not isinstance(target, int)
    tgt = tuple(target) if bigraded else (target,)
    if any(c < 0 for c in tgt):
        raise ValueError(f"negative target degree {target}")
    degs = []
    for g in gs.generators:
        d = gs.grading(g, bigraded)
        degs.append(d if bigraded else (d,))
    out = []
    path = []

    def dfs(i: int, rem: tuple):
        if all(c == 0 for c in rem):
            out.append(tuple(path))
            return
        if i == len(degs):
            return
        d = degs[i]
        emax = min((r // c for r, c in zip(rem, d) if c > 0), default=0)
        for e in range(emax, -1, -1):
            nxt = tuple(r - e * c for r, c in zip(rem, d))
            if any(c < 0 for c in nxt):
                continue
            if e:
                path.append((i, e))
            dfs(i + 1, nxt)
            if e:
                path.pop()

    dfs(0, tgt)
    return out


class GenPoly:
    """Integer/rational-coefficient polynomial in generator labels."""

    def __init__(self, terms=None):
        self.terms = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(sorted(mono))] = self.terms.get(tuple(sorted(mono)), 0) + c

    @staticmethod
    def var(label: str) -> "GenPoly":
        return GenPoly({((label, 1),): 1})

    @staticmethod
    def const(c) -> "GenPoly":
        return GenPoly({(): Fraction(c)})

    @staticmethod
    def from_monomial(mono: dict) -> "GenPoly":
        return GenPoly({tuple(sorted((l, e) for l, e in mono.items() if e)): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GenPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GenPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GenPoly({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = {}
                for l, e in m1 + m2:
                    merged[l] = merged.get(l, 0) + e
                key = tuple(sorted(merged.items()))
                out[key] = out.get(key, 0) + c1 * c2
        return GenPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return GenPoly({m: c / k for m, c in self.terms.items()})

    def __pow__(self, e: int):
        out = GenPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def monomial_count(self) -> int:
        return len(self.terms)

    def labels(self):
        return sorted({l for m in self.terms for l, _ in m})

    def degree(self, deg_map: dict):
        """Weighted degree if homogeneous, else None; 0 for constants."""
        degs = {sum(deg_map[l] * e for l, e in m) for m in self.terms}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def matrix_coordinate_degree(self, deg_map: dict) -> int:
        """Max total degree in the underlying matrix entries (Schwartz-Zippel bound)."""
        return max((sum(deg_map[l] * e for l, e in m) for m in self.terms), default=0)

    @property
    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            if not m:
                parts.append(str(c))
                continue
            body = "".join(l if e == 1 else f"{l}^{e}" for l, e in m)
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


class EvaluationCache:
    """Generator values over a deterministic batch of sample points.

    One value array of shape (points,) per generator; every monomial column
    is a product of cached powers, so each generator is evaluated once per
    point regardless of how many monomials use it.
    """

    def __init__(self, gs: GeneratorSet, ctx: EvaluationContext, npoints: int, stream: int = 0):
        if ctx.n != gs.n:
            raise ValueError(f"context order {ctx.n} does not match set order {gs.n}")
        self.gs = gs
        self.ctx = ctx
        self.npoints = npoints
        self.stream = stream
        self.ops = ModOps(ctx.p)
        self.field = PrimeField(ctx.p)
        self.xb = sample_traceless_batch(ctx.n, npoints, ctx.p, ctx.seed, stream=2 * stream)
        if gs.mode == TWO_GENERIC:
            self.yb = sample_traceless_batch(ctx.n, npoints, ctx.p, ctx.seed, stream=2 * stream + 1)
        else:
            self.yb = self.ops.transpose(self.xb)
        self.values = {
            g.label: evaluate_invariant_batch(g.expr, self.xb, self.yb, self.ops)
            for g in gs.generators
        }

    def extra_expression(self, label: str, expr: InvariantExpression):
        if label not in self.values:
            self.values[label] = evaluate_invariant_batch(expr, self.xb, self.yb, self.ops)
        return self.values[label]

    def monomial_column(self, mono, rows: int = None) -> np.ndarray:
        """mono: (index, exponent) pairs over the set, or a label -> exp dict."""
        if isinstance(mono, dict):
            items = [(self.values[l], e) for l, e in mono.items()]
        else:
            items = [(self.values[self.gs.generators[i].label], e) for i, e in mono]
        col = None
        for v, e in items:
            p = self.ops.pow(v, e)
            col = p if col is None else self.ops.mul(col, p)
        if col is None:
            col = np.ones(self.npoints, dtype=self.ops.dtype)
        return col if rows is None else col[:rows]

    def poly_column(self, poly: GenPoly, rows: int = None) -> np.ndarray:
        acc = None
        for m, c in poly.terms.items():
            col = self.monomial_column({l: e for l, e in m})
            col = self.ops.mul(col, self.field.of_rational(c))
            acc = col if acc is None else self.ops.add(acc, col)
        if acc is None:
            acc = np.zeros(self.npoints, dtype=self.ops.dtype)
        return acc if rows is None else acc[:rows]

    def matrix(self, columns, rows: int) -> np.ndarray:
        if rows > self.npoints:
            raise ValueError(f"cache holds {self.npoints} points, {rows} requested")
        out = np.empty((rows, len(columns)), dtype=self.ops.dtype)
        for j, col in enumerate(columns):
            out[:, j] = col[:rows]
        return out


@dataclass(frozen=True)
class DimensionRow:
    target: object
    monomial_count: int
    rank: int
    expected: object = None

    @property
    def match(self):
        return None if self.expected is None else self.rank == self.expected


def graded_dimension(gs: GeneratorSet, target, ctx: EvaluationContext, cache: EvaluationCache = None,
                     expected=None, surplus: int = POINT_SURPLUS):
    """Dimension of the degree-``target`` component of the subalgebra the set spans."""
    monos = enumerate_monomials(gs, target)
    rows = len(monos) + surplus
    if cache is None or cache.npoints < rows:
        cache = EvaluationCache(gs, ctx, rows, stream=_STREAM_DIMS)
    mat = cache.matrix([cache.monomial_column(m) for m in monos], rows)
    rank = cache.ops.rank(mat) if monos else 0
    return DimensionRow(target, len(monos), rank, expected)


def dimension_scan(gs: GeneratorSet, targets, ctx: EvaluationContext, expected=None,
                   surplus: int = POINT_SURPLUS):
    """Graded dimensions for many targets off one shared point batch."""
    targets = list(targets)
    per_target = {t: enumerate_monomials(gs, t) for t in targets}
    rows_needed = max((len(m) for m in per_target.values()), default=0) + surplus
    cache = EvaluationCache(gs, ctx, rows_needed, stream=_STREAM_DIMS)
    out = []
    for t in targets:
        monos = per_target[t]
        rows = len(monos) + surplus
        rank = cache.ops.rank(cache.matrix([cache.monomial_column(m) for m in monos], rows)) if monos else 0
        exp = None if expected is None else expected.get(t, None)
        out.append(DimensionRow(t, len(monos), rank, exp))
    return out


@dataclass(frozen=True)
class MembershipCertificate:
    target_label: str
    degree: object
    verdict: str
    rank_without: int
    rank_with: int
    points: int
    seed: int
    streams: tuple = (0,)


def is_member(target: InvariantExpression, gs: GeneratorSet, ctx: EvaluationContext,
              label: str = None, streams=(0,), surplus: int = POINT_SURPLUS) -> MembershipCertificate:
    """Rank-separation membership test of ``target`` against the span of the
    degree-d monomials in ``gs`` (d = the target's degree in the set grading).

    A strict rank increase at any stream certifies independence; rank equality
    at every stream yields a probabilistic membership verdict.
    """
    degree = target.total_degree
    if degree is None:
        raise ValueError("membership target must be homogeneous")
    label = label or target.text
    monos = enumerate_monomials(gs, degree)
    rows = len(monos) + 1 + surplus
    rank_without = rank_with = None
    for stream in streams:
        cache = EvaluationCache(gs, ctx, rows, stream=_STREAM_MEMBER + stream)
        cols = [cache.monomial_column(m) for m in monos]
        tcol = evaluate_invariant_batch(target, cache.xb, cache.yb, cache.ops)
        r0 = cache.ops.rank(cache.matrix(cols, rows)) if cols else 0
        r1 = cache.ops.rank(cache.matrix(cols + [tcol], rows))
        rank_without, rank_with = r0, r1
        if r1 > r0:
            return MembershipCertificate(label, degree, CERTIFIED_INDEPENDENT, r0, r1,
                                         rows, ctx.seed, (stream,))
    return MembershipCertificate(label, degree, PROBABLY_MEMBER, rank_without, rank_with,
                                 rows, ctx.seed, tuple(streams))


def joint_membership(targets, gs: GeneratorSet, ctx: EvaluationContext, labels=None,
                     streams=(0, 1, 2), surplus: int = POINT_SURPLUS):
    """Batched :func:`is_member` for several homogeneous targets.

    Targets are grouped by degree; per degree and stream a single joint rank
    comparison (rank unchanged after appending every target column) certifies
    simultaneous membership.  Any rank increase falls back to individual tests
    to attribute it.
    """
    targets = list(targets)
    labels = list(labels) if labels is not None else [t.text for t in targets]
    by_deg = {}
    for idx, t in enumerate(targets):
        d = t.total_degree
        if d is None:
            raise ValueError("membership target must be homogeneous")
        by_deg.setdefault(d, []).append(idx)
    certs = {}
    for d, idxs in sorted(by_deg.items()):
        monos = enumerate_monomials(gs, d)
        rows = len(monos) + len(idxs) + surplus
        joint_ok = True
        r0 = r1 = 0
        for stream in streams:
            cache = EvaluationCache(gs, ctx, rows, stream=_STREAM_MEMBER + stream)
            cols = [cache.monomial_column(m) for m in monos]
            tcols = [evaluate_invariant_batch(targets[i], cache.xb, cache.yb, cache.ops)
                     for i in idxs]
            r0 = cache.ops.rank(cache.matrix(cols, rows)) if cols else 0
            r1 = cache.ops.rank(cache.matrix(cols + tcols, rows))
            if r1 > r0:
                joint_ok = False
                break
        if joint_ok:
            for i in idxs:
                certs[i] = MembershipCertificate(labels[i], d, PROBABLY_MEMBER, r0, r1,
                                                 rows, ctx.seed, tuple(streams))
        else:
            for i in idxs:
                certs[i] = is_member(targets[i], gs, ctx, label=labels[i],
                                     streams=streams, surplus=surplus)
    return [certs[i] for i in range(len(targets))]


def minimality_report(gs: GeneratorSet, ctx: EvaluationContext, surplus: int = POINT_SURPLUS):
    """One membership certificate per generator, against the others of degree <= its own.

    Uses a joint per-degree certificate: a composite monomial of degree d can
    never contain a degree-d generator (all factors have positive degree), so
    if rank(composites + all bare degree-d generators) = rank(composites) +
    #generators, every degree-d generator is independent of the rest at once.
    Degrees where the joint test does not certify fall back to individual
    rank comparisons.
    """
    certs = {}
    degrees = sorted({g.degree for g in gs.generators})
    for d in degrees:
        bare = [g for g in gs.generators if g.degree == d]
        composites = [m for m in enumerate_monomials(gs, d) if sum(e for _, e in m) >= 2
                      or (len(m) == 1 and gs.generators[m[0][0]].degree != d)]
        rows = len(composites) + len(bare) + surplus
        cache = EvaluationCache(gs, ctx, rows, stream=_STREAM_MEMBER)
        comp_cols = [cache.monomial_column(m) for m in composites]
        bare_cols = [cache.values[g.label] for g in bare]
        r0 = cache.ops.rank(cache.matrix(comp_cols, rows)) if comp_cols else 0
        r1 = cache.ops.rank(cache.matrix(comp_cols + bare_cols, rows))
        if r1 == r0 + len(bare):
            for g in bare:
                certs[g.label] = MembershipCertificate(
                    g.label, d, CERTIFIED_INDEPENDENT, r1 - 1, r1, rows, ctx.seed, (0,))
        else:
            for g in bare:
                certs[g.label] = is_member(g.expr, gs.without(g.label), ctx, label=g.label,
                                           streams=(0, 1, 2), surplus=surplus)
    return [certs[g.label] for g in gs.generators]


# ---------------------------------------------------------------------------
# Jacobian ranks via dual numbers

def _coordinate_tangents(n: int):
    """Tangent matrices of the n^2 - 1 free coordinates of a traceless matrix."""
    tangents = []
    for i in range(n):
        for j in range(n):
            if i != j:
                t = [[0] * n for _ in range(n)]
                t[i][j] = 1
                tangents.append(t)
    for i in range(n - 1):
        t = [[0] * n for _ in range(n)]
        t[i][i] = 1
        t[n - 1][n - 1] = -1
        tangents.append(t)
    return tangents


@dataclass(frozen=True)
class JacobianReport:
    set_name: str
    per_seed: tuple
    coordinates: int

    @property
    def rank(self) -> int:
        return max(self.per_seed)


def jacobian_rank(gs: GeneratorSet, ctx: EvaluationContext, seeds: int = 3) -> JacobianReport:
    """Rank of the (generators x free coordinates) matrix of partials at random
    points, one dual-number pass per coordinate, maximized over seeds."""
    fld = PrimeField(ctx.p)
    dual = DualRing(fld)
    tangents = _coordinate_tangents(gs.n)
    sides = ("x",) if gs.mode == TRANSPOSE_BOUND else ("x", "y")
    per_seed = []
    for s in range(seeds):
        xb = sample_traceless_batch(gs.n, 1, ctx.p, ctx.seed, stream=_STREAM_JACOBIAN + s)
        x0 = [[int(v) for v in row] for row in xb[0]]
        rows = []
        if gs.mode == TWO_GENERIC:
            yb = sample_traceless_batch(gs.n, 1, ctx.p, ctx.seed,
                                        stream=_STREAM_JACOBIAN + 50 + s)
            y0 = [[int(v) for v in row] for row in yb[0]]
        for side in sides:
            for t in tangents:
                if gs.mode == TRANSPOSE_BOUND:
                    xd = [[(x0[i][j], t[i][j] % ctx.p) for j in range(gs.n)] for i in range(gs.n)]
                    yd = [[xd[j][i] for j in range(gs.n)] for i in range(gs.n)]
                else:
                    tx = t if side == "x" else [[0] * gs.n for _ in range(gs.n)]
                    ty = t if side == "y" else [[0] * gs.n for _ in range(gs.n)]
                    xd = [[(x0[i][j], tx[i][j] % ctx.p) for j in range(gs.n)] for i in range(gs.n)]
                    yd = [[(y0[i][j], ty[i][j] % ctx.p) for j in range(gs.n)] for i in range(gs.n)]
                rows.append([evaluate_invariant_matrices(g.expr, xd, yd, dual)[1]
                             for g in gs.generators])
        per_seed.append(rank_mod_p(rows, ctx.p))
    return JacobianReport(gs.name, tuple(per_seed), len(tangents) * len(sides))


# ---------------------------------------------------------------------------
# polynomial identities among generators

@dataclass(frozen=True)
class IdentityReport:
    holds: bool
    trials: int
    nonzero_residuals: int
    schwartz_zippel_bound: float
    seed: int


def verify_polynomial_identity(rel: GenPoly, gs: GeneratorSet, trials: int,
                               ctx: EvaluationContext) -> IdentityReport:
    """Evaluate the relation at independent random points; holds iff every
    residual vanishes.  Reports the per-trial false-pass bound degree/p."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cache = EvaluationCache(gs, ctx, trials, stream=_STREAM_IDENTITY)
    residuals = cache.poly_column(rel)
    nonzero = int(np.count_nonzero(residuals))
    bound = rel.matrix_coordinate_degree(gs.degree_map) / ctx.p
    return IdentityReport(nonzero == 0, trials, nonzero, bound, ctx.seed)


# ---------------------------------------------------------------------------
# Hironaka decomposition checks

@dataclass(frozen=True)
class HironakaRow:
    degree: int
    product_count: int
    series_coefficient: object
    rank: int
    full_dimension: int

    @property
    def count_ok(self):
        return None if self.series_coefficient is None else self.product_count == self.series_coefficient

    @property
    def free_ok(self):
        return self.rank == self.product_count

    @property
    def span_ok(self):
        return self.rank == self.full_dimension

    @property
    def ok(self):
        return bool(self.count_ok) and self.free_ok and self.span_ok


def _module_columns(cache: EvaluationCache, hsop: GeneratorSet, basis_polys, degree: int,
                    deg_map: dict):
    """Columns (hsop monomial) x (basis element) of total degree ``degree``."""
    columns = []
    descr = []
    for bi, b in enumerate(basis_polys):
        bd = b.degree(deg_map)
        if bd is None:
            raise ValueError(f"inhomogeneous basis element: {b.text}")
        rem = degree - bd
        if rem < 0:
            continue
        bcol = cache.poly_column(b)
        for mono in enumerate_monomials(hsop, rem):
            mcol = cache.monomial_column({hsop.generators[i].label: e for i, e in mono})
            columns.append(cache.ops.mul(mcol, bcol))
            descr.append((mono, bi))
    return columns, descr


def hironaka_check(hsop: GeneratorSet, basis, degrees, series_coeffs,
                   full_set: GeneratorSet, ctx: EvaluationContext,
                   surplus: int = POINT_SURPLUS):
    """Per-degree count / freeness / spanning report for a candidate free basis
    of the invariant algebra over the polynomial ring on the HSOP."""
    deg_map = full_set.degree_map
    degrees = list(degrees)
    full_monos = {d: enumerate_monomials(full_set, d) for d in degrees}
    # upper bound on columns: full monomial count dominates the module count
    est = max(max((len(m) for m in full_monos.values()), default=0),
              max((_module_count(hsop, basis, d, deg_map) for d in degrees), default=0))
    cache = EvaluationCache(full_set, ctx, est + surplus, stream=_STREAM_DIMS)
    rows_out = []
    for d in degrees:
        cols, _ = _module_columns(cache, hsop, basis, d, deg_map)
        rows = min(len(cols) + surplus, cache.npoints)
        rank = cache.ops.rank(cache.matrix(cols, rows)) if cols else 0
        fm = full_monos[d]
        frank = cache.ops.rank(cache.matrix([cache.monomial_column(m) for m in fm],
                                            min(len(fm) + surplus, cache.npoints))) if fm else 0
        coeff = series_coeffs.get(d, None) if series_coeffs is not None else None
        rows_out.append(HironakaRow(d, len(cols), coeff, rank, frank))
    return rows_out


def _module_count(hsop, basis, degree, deg_map):
    total = 0
    for b in basis:
        bd = b.degree(deg_map)
        if bd is not None and degree - bd >= 0:
            total += len(enumerate_monomials(hsop, degree - bd))
    return total


@dataclass(frozen=True)
class RepairRow:
    degree: int
    needed: int
    candidates_checked: int
    passing: tuple  # texts of individually rank-increasing candidates
    accepted: tuple  # texts of the greedy completion
    success: bool


def repair_module_basis(hsop: GeneratorSet, fixed, target_degrees, pool: GeneratorSet,
                        ctx: EvaluationContext, surplus: int = POINT_SURPLUS):
    """Search degree-correct products of pool generators completing a module basis.

    For each target degree the base columns are the module products of the
    fixed elements; a candidate passes iff appending its column strictly
    increases the rank.  Returns per-degree rows with every individually
    passing candidate and a greedy completion (or an explicit failure).
    """
    deg_map = dict(pool.degree_map)
    deg_map.update(hsop.degree_map)
    full_for_cache = pool if set(hsop.labels) <= set(pool.labels) else GeneratorSet(
        f"{pool.name}+{hsop.name}", pool.generators + tuple(
            g for g in hsop.generators if g.label not in pool.labels), pool.mode, pool.n)
    targets = sorted(set(target_degrees))
    needed = {d: sum(1 for t in target_degrees if t == d) for d in targets}
    rows_out = []
    for d in targets:
        candidates = [GenPoly.from_monomial({pool.generators[i].label: e for i, e in mono})
                      for mono in enumerate_monomials(pool, d)]
        est = _module_count(hsop, fixed, d, deg_map) + len(candidates) + 1
        cache = EvaluationCache(full_for_cache, ctx, est + surplus, stream=_STREAM_REPAIR)
        base_cols, _ = _module_columns(cache, hsop, fixed, d, deg_map)
        rows = min(len(base_cols) + len(candidates) + surplus, cache.npoints)
        r0 = cache.ops.rank(cache.matrix(base_cols, rows)) if base_cols else 0
        passing = []
        accepted = []
        acc_cols = list(base_cols)
        r_acc = r0
        for cand in candidates:
            col = cache.poly_column(cand)
            if cache.ops.rank(cache.matrix(base_cols + [col], rows)) > r0:
                passing.append(cand.text)
            if len(accepted) < needed[d]:
                if cache.ops.rank(cache.matrix(acc_cols + [col], rows)) > r_acc:
                    acc_cols.append(col)
                    r_acc += 1
                    accepted.append(cand.text)
        rows_out.append(RepairRow(d, needed[d], len(candidates), tuple(passing),
                                  tuple(accepted), len(accepted) == needed[d]))
    return rows_out
