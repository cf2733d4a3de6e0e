"""Verify the order-3 quadratic relation E6^2 + c1*E6 + c2 = 0.

The exact rational coefficients c1 and c2 live in the catalog; the relation
is evaluated at random traceless matrices over p = 2^61 - 1.  Each zero
residual multiplies the false-pass probability by about degree/p.
"""

from __future__ import annotations

from soinv import catalog, graded
from soinv.modular import DEFAULT_PRIME, TRANSPOSE_BOUND, EvaluationContext

gs = catalog.get("S3_E6").payload
ctx = EvaluationContext(3, p=DEFAULT_PRIME, seed=42, mode=TRANSPOSE_BOUND)
rel = catalog.syzygy_relation()
print("relation monomials:", rel.monomial_count())

rep = graded.verify_polynomial_identity(rel, gs, trials=100, ctx=ctx)
print("holds:", rep.holds)
print("nonzero residuals:", rep.nonzero_residuals, "of", rep.trials)
print("per-trial false-pass bound:", rep.schwartz_zippel_bound)
print("combined bound:", rep.schwartz_zippel_bound ** rep.trials)
