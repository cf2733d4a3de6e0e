"""Independence and membership certificates.

A rank increase after appending a column is a sound proof of independence;
rank equality across independent sample streams is probabilistic membership.
Shown here: the order-3 table is minimal, tr(x^4) is dependent (it equals
tr(x^2)^2/2 for traceless 3x3), and the nine order-5 redundant words all land
inside the algebra generated by the 89-word table.
"""

from __future__ import annotations

from soinv import catalog, graded
from soinv.modular import FAST_PRIME, TRANSPOSE_BOUND, EvaluationContext
from soinv.words import InvariantExpression, parse_invariant

ctx3 = EvaluationContext(3, p=FAST_PRIME, seed=42, mode=TRANSPOSE_BOUND)
s3 = catalog.get("S3_E6").payload
for cert in graded.minimality_report(s3, ctx3):
    print(f"  {cert.target_label}: {cert.verdict}")

cert = graded.is_member(parse_invariant("tr(x^4)"), s3, ctx3, streams=(0, 1, 2))
print(f"  tr(x^4): {cert.verdict} (rank {cert.rank_without} -> {cert.rank_with})")

print("\norder-5 redundant words vs the 89-word table (takes a few minutes):")
ctx5 = EvaluationContext(5, p=FAST_PRIME, seed=42, mode=TRANSPOSE_BOUND)
gs = catalog.get("S5_MSG89").payload
words = catalog.get("S5_REDUNDANT9").payload
for cert in graded.joint_membership([InvariantExpression.trace_of(w) for w in words],
                                    gs, ctx5, labels=[w.text for w in words]):
    print(f"  {cert.target_label}: {cert.verdict}")
