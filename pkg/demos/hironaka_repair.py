"""The order-4 module basis story: report the stated basis, then repair it.

The stated 16-element basis over the 9-parameter polynomial ring fails the
count/freeness/spanning check starting at degree 10.  Fixing the unambiguous
13 elements (identity, V1..V11, V1V2) and searching degree-correct products
of the V's finds completions at the three degrees the series numerator
demands.
"""

from __future__ import annotations

from soinv import catalog, graded
from soinv.graded import GenPoly, GeneratorSet
from soinv.modular import FAST_PRIME, TRANSPOSE_BOUND, EvaluationContext

ctx = EvaluationContext(4, p=FAST_PRIME, seed=42, mode=TRANSPOSE_BOUND)
full = catalog.get("S4_UV20").payload
hsop = catalog.get("S4_HSOP_U9").payload
basis = list(catalog.get("S4_MODULE_BASIS16").payload)
coeffs = dict(enumerate(catalog.get("SERIES_S4").payload.expand(12).univariate_list()))

print("stated basis, degrees 8..12:")
for row in graded.hironaka_check(hsop, basis, range(8, 13), coeffs, full, ctx):
    flag = "ok" if row.ok else "MISMATCH"
    print(f"  degree {row.degree}: products={row.product_count} rank={row.rank}"
          f" series={row.series_coefficient} dim={row.full_dimension}  {flag}")

v = {f"V{i}": GenPoly.var(f"V{i}") for i in range(1, 12)}
fixed = [GenPoly.const(1)] + list(v.values()) + [v["V1"] * v["V2"]]
vset = GeneratorSet("vs", tuple(full.by_label(f"V{i}") for i in range(1, 12)),
                    full.mode, full.n)
print("\nrepair at the numerator-mandated degrees:")
for row in graded.repair_module_basis(hsop, fixed, [10, 11, 15], vset, ctx):
    print(f"  degree {row.degree}: passing={list(row.passing)} -> accepted {list(row.accepted)}")
