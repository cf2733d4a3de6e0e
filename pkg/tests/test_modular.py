"""Prime field, dual numbers, dense linear algebra and sampling."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from soinv.modular import (
    DEFAULT_PRIME,
    FAST_PRIME,
    TRANSPOSE_BOUND,
    TWO_GENERIC,
    DualRing,
    EvaluationContext,
    PrimeField,
    cayley_special_orthogonal,
    det_mod_p,
    mat_identity,
    mat_inv_mod_p,
    mat_mul,
    mat_transpose,
    rank_mod_p,
    random_traceless,
    sample_points,
)

P = FAST_PRIME
F = PrimeField(P)

nonzero = st.integers(min_value=1, max_value=P - 1)
elements = st.integers(min_value=0, max_value=P - 1)


@given(nonzero)
def test_field_inverse(a):
    assert F.mul(a, F.inv(a)) == F.one


@given(elements, elements, elements)
def test_field_ring_axioms(a, b, c):
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    assert F.sub(a, b) == F.add(a, F.neg(b))


@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_of_rational_matches_modular_division(num, den):
    got = F.of_rational(Fraction(num, den))
    assert F.mul(got, den % P) == num % P


def test_of_rational_bad_denominator():
    small = PrimeField(7)
    with pytest.raises(ZeroDivisionError):
        small.of_rational(Fraction(1, 14))


def test_prime_field_rejects_nonprime_sizes():
    # constructor only sanity-checks positivity; arithmetic assumes primality
    with pytest.raises(ValueError):
        PrimeField(1)


duals = st.tuples(elements, elements)


@given(duals, duals)
def test_dual_product_rule(a, b):
    D = DualRing(F)
    prod = D.mul(a, b)
    assert prod[0] == F.mul(a[0], b[0])
    assert prod[1] == F.add(F.mul(a[0], b[1]), F.mul(a[1], b[0]))


@given(duals, duals, duals)
def test_dual_distributivity(a, b, c):
    D = DualRing(F)
    left = D.mul(a, D.add(b, c))
    right = D.add(D.mul(a, b), D.mul(a, c))
    assert left == right


def test_dual_tangent_squares_to_zero():
    D = DualRing(F)
    eps = D.lift(0, 1)
    assert D.mul(eps, eps) == D.zero


# ---------------------------------------------------------------------------
# dense linear algebra vs independent oracles

@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25)
def test_det_matches_sympy(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = [[rng.randrange(100) for _ in range(n)] for _ in range(n)]
    assert det_mod_p(m, P) == int(sympy.Matrix(m).det()) % P


def test_rank_of_outer_product_factorization():
    import random

    rng = random.Random(7)
    for k in range(4):
        a = [[rng.randrange(P) for _ in range(k)] for _ in range(6)]
        b = [[rng.randrange(P) for _ in range(6)] for _ in range(k)]
        m = [[sum(a[i][t] * b[t][j] for t in range(k)) % P for j in range(6)] for i in range(6)]
        assert rank_mod_p(m, P) == k


def test_matrix_inverse_round_trip():
    import random

    rng = random.Random(3)
    m = [[rng.randrange(P) for _ in range(4)] for _ in range(4)]
    inv = mat_inv_mod_p(m, P)
    prod = mat_mul(m, inv, F)
    assert prod == mat_identity(4, F)


def test_singular_matrix_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        mat_inv_mod_p([[1, 2], [2, 4]], P)


# ---------------------------------------------------------------------------
# sampling

def test_sample_points_deterministic_and_traceless():
    ctx = EvaluationContext(4, p=P, seed=11, mode=TWO_GENERIC)
    pts = sample_points(ctx, 5)
    again = sample_points(ctx, 5)
    assert pts == again
    for pt in pts:
        assert sum(pt.x[i][i] for i in range(4)) % P == 0
        assert sum(pt.y[i][i] for i in range(4)) % P == 0
        assert pt.x != pt.y


def test_transpose_bound_points():
    ctx = EvaluationContext(3, p=P, seed=11, mode=TRANSPOSE_BOUND)
    for pt in sample_points(ctx, 4):
        assert [list(r) for r in pt.y] == mat_transpose(pt.x)


def test_streams_are_disjoint():
    ctx = EvaluationContext(3, p=P, seed=11, mode=TWO_GENERIC)
    assert sample_points(ctx, 3, stream=0) != sample_points(ctx, 3, stream=1)


def test_seed_changes_points():
    a = random_traceless(5, EvaluationContext(5, p=P, seed=1))
    b = random_traceless(5, EvaluationContext(5, p=P, seed=2))
    assert a != b


def test_cayley_matrix_is_special_orthogonal():
    for n in (3, 4, 5):
        ctx = EvaluationContext(n, p=P, seed=5)
        q = cayley_special_orthogonal(n, ctx)
        assert mat_mul(q, mat_transpose(q), F) == mat_identity(n, F)
        assert det_mod_p([list(r) for r in q], P) == 1


def test_cayley_large_prime():
    ctx = EvaluationContext(4, p=DEFAULT_PRIME, seed=5)
    q = cayley_special_orthogonal(4, ctx)
    fld = PrimeField(DEFAULT_PRIME)
    assert mat_mul(q, mat_transpose(q), fld) == mat_identity(4, fld)
