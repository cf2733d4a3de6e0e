"""Exact Taylor expansion of rational series with denominator (1 - monomial) factors.

Series are uni- or bivariate with arbitrary-precision integer coefficients.
A :class:`RationalSeries` stores the numerator as an exponent -> coefficient
map and the denominator as a multiset of monomial exponents m, each standing
for a factor (1 - u^m).  Expansion uses the prefix recurrence
``new[e] = old[e] + new[e - m]`` for every denominator factor, which is the
exact convolution with the geometric series of that factor.

Exponent keys are tuples: (a,) univariate, (a, b) bivariate.
"""

from __future__ import annotations

from dataclasses import dataclass


def _key(e):
    return (e,) if isinstance(e, int) else tuple(e)


@dataclass(frozen=True)
class CoefficientTable:
    """Degree (or bidegree) -> integer coefficient, complete up to a cap."""

    coeffs: dict
    cap: int
    nvars: int

    def __getitem__(self, e):
        k = _key(e)
        if sum(k) > self.cap:
            raise KeyError(f"degree {e} beyond cap {self.cap}")
        return self.coeffs.get(k, 0)

    def get(self, e, default=None):
        k = _key(e)
        if sum(k) > self.cap:
            return default
        return self.coeffs.get(k, 0)

    def univariate_list(self) -> list:
        if self.nvars != 1:
            raise ValueError("not a univariate table")
        return [self.coeffs.get((d,), 0) for d in range(self.cap + 1)]


@dataclass(frozen=True)
class RationalSeries:
    """Numerator polynomial over a denominator of (1 - monomial) factors.

    ``numerator_gap`` marks an exponent range [lo, hi] whose numerator terms
    are not recorded (used when a printed numerator elides middle terms);
    such a series cannot be expanded, only inspected.
    """

    numerator: dict  # exponent tuple -> int
    denominator: tuple  # of exponent tuples, each a factor (1 - u^m)
    nvars: int = 1
    numerator_gap: tuple = None

    def __post_init__(self):
        for m in self.denominator:
            if sum(m) <= 0:
                raise ValueError(f"denominator factor with nonpositive degree: {m}")

    @property
    def expandable(self) -> bool:
        return self.numerator_gap is None

    def expand(self, cap: int) -> CoefficientTable:
        """Exact Taylor coefficients through total degree ``cap``."""
        if cap < 0:
            raise ValueError("cap must be >= 0")
        if not self.expandable:
            raise ValueError("numerator has elided terms; series is not expandable")
        coeffs = {k: v for k, v in self.numerator.items() if sum(k) <= cap}
        keys = _degree_keys(self.nvars, cap)
        for m in self.denominator:
            for k in keys:
                prev = tuple(a - b for a, b in zip(k, m))
                if all(c >= 0 for c in prev):
                    coeffs[k] = coeffs.get(k, 0) + coeffs.get(prev, 0)
        coeffs = {k: v for k, v in coeffs.items() if v != 0}
        return CoefficientTable(coeffs, cap, self.nvars)

    def numerator_degree(self) -> int:
        return max(sum(k) for k in self.numerator)


def _degree_keys(nvars: int, cap: int) -> list:
    """All exponent tuples of total degree <= cap, in increasing total degree."""
    if nvars == 1:
        return [(d,) for d in range(cap + 1)]
    return [(i, d - i) for d in range(cap + 1) for i in range(d + 1)]


def univariate(numerator: dict, denominator) -> RationalSeries:
    num = {(e,) if isinstance(e, int) else tuple(e): c for e, c in numerator.items()}
    den = tuple((m,) if isinstance(m, int) else tuple(m) for m in denominator)
    return RationalSeries(num, den, nvars=1)


def expand(series: RationalSeries, cap: int) -> CoefficientTable:
    return series.expand(cap)


def multiply_back(table: CoefficientTable, series: RationalSeries) -> dict:
    """Expansion times the denominator factors, truncated at the cap.

    Recovers the numerator exactly on degrees <= cap - max factor degree;
    used as an independent cross-check of :meth:`RationalSeries.expand`.
    """
    coeffs = dict(table.coeffs)
    for m in series.denominator:
        out = {}
        for k, v in coeffs.items():
            out[k] = out.get(k, 0) + v
            shifted = tuple(a + b for a, b in zip(k, m))
            if sum(shifted) <= table.cap:
                out[shifted] = out.get(shifted, 0) - v
        coeffs = {k: v for k, v in out.items() if v != 0}
    return coeffs


def divide_by_one_minus_t(table: CoefficientTable) -> CoefficientTable:
    """Convolve a univariate table with the all-ones series (prefix sums)."""
    if table.nvars != 1:
        raise ValueError("divide_by_one_minus_t needs a univariate table")
    out = {}
    acc = 0
    for d in range(table.cap + 1):
        acc += table.coeffs.get((d,), 0)
        if acc:
            out[(d,)] = acc
    return CoefficientTable(out, table.cap, 1)


def table_from_entries(entries, cap: int, nvars: int) -> CoefficientTable:
    return CoefficientTable({_key(e): c for e, c in entries.items() if c != 0}, cap, nvars)


def symmetry_check(obj) -> bool:
    """Palindromy of a univariate numerator, or s<->t symmetry of a table.

    For a series with a numerator gap, only exponent pairs (k, D-k) with both
    entries outside the gap are compared.
    """
    if isinstance(obj, RationalSeries):
        dmax = obj.numerator_degree()
        lo, hi = obj.numerator_gap if obj.numerator_gap else (1, 0)
        for k in range(dmax + 1):
            a, b = k, dmax - k
            if lo <= a <= hi or lo <= b <= hi:
                continue
            if obj.numerator.get((a,), 0) != obj.numerator.get((b,), 0):
                return False
        return True
    if obj.nvars != 2:
        raise ValueError("symmetry_check on tables needs a bivariate table")
    for (i, j), v in obj.coeffs.items():
        if obj.coeffs.get((j, i), 0) != v:
            return False
    return True
