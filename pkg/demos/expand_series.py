"""Expand the catalog Poincare series and compare with the printed tables.

The order-4 series expands exactly from its rational form.  The order-5
rational form is stored verbatim with elided numerator terms, so its printed
Taylor table is the reference instead.
"""

from __future__ import annotations

from soinv import catalog

s4 = catalog.get("SERIES_S4").payload
coeffs = s4.expand(17).univariate_list()
print("order 4, degrees 0..17")
print("  expanded:", coeffs)
print("  printed: ", list(catalog.S4_TAYLOR))
print("  match:   ", coeffs == list(catalog.S4_TAYLOR))

s5 = catalog.get("SERIES_S5").payload
print("\norder 5")
print("  expandable:", s5.expandable, "(numerator gap", s5.numerator_gap, ")")
print("  printed Taylor 0..18:", list(catalog.S5_TAYLOR))

table = catalog.get("BIVARIATE_C52_TABLE").payload
print("\ntwo-matrix bigraded table: cap", table.cap)
print("  dim(7,7) =", table[(7, 7)], " dim(2,2) =", table[(2, 2)])
