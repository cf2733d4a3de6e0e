"""Graded dimensions of the invariant algebras vs their series coefficients.

For each order the generators are evaluated at random points over a prime
field; the rank of the monomial evaluation matrix at each degree is the
graded dimension with high probability, and it must equal the series
coefficient.
"""

from __future__ import annotations

from soinv import catalog, graded
from soinv.modular import FAST_PRIME, TRANSPOSE_BOUND, EvaluationContext

for case, entry, n, cap in (("order 3", "S3_E6", 3, 12),
                            ("order 4", "S4_UV20", 4, 10),
                            ("order 5", "S5_MSG89", 5, 9)):
    gs = catalog.get(entry).payload
    ctx = EvaluationContext(n, p=FAST_PRIME, seed=42, mode=TRANSPOSE_BOUND)
    rows = graded.dimension_scan(gs, range(cap + 1), ctx)
    if case == "order 5":
        expected = list(catalog.S5_TAYLOR[:cap + 1])
    else:
        name = "SERIES_S3" if n == 3 else "SERIES_S4"
        expected = catalog.get(name).payload.expand(cap).univariate_list()
    got = [r.rank for r in rows]
    print(f"{case}: computed {got}")
    print(f"{' ' * len(case)}  series   {expected}  match={got == expected}")
