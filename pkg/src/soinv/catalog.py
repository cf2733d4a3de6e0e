"""Single source of truth for all reference data: generator tables, the
order-3 syzygy coefficients, Poincare series, printed Taylor tables, the
conjectured order-5 parameter system, the redundant-word list and structural
counts.  Tables live as line-oriented text files under ``data/`` in the
canonical word grammar (``pair: w1 | w2`` for star-pairs, ``sum: w1 + w2``
for two-word entries, ``#`` comments); everything validates at load time.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .graded import GenPoly, Generator, GeneratorSet
from .modular import TRANSPOSE_BOUND, TWO_GENERIC
from .series import CoefficientTable, RationalSeries, table_from_entries, univariate
from .words import InvariantExpression, Word, cyclic_normal_form, parse_invariant, parse_word, star


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    payload: object
    provenance: str


@dataclass(frozen=True)
class Table3Entry:
    kind: str  # pair | single | sum
    words: tuple


@dataclass(frozen=True)
class Table3:
    entries: tuple

    @property
    def matrix_count(self) -> int:
        """Matrices listed: 2 per pair, 1 per single, 1 per sum entry."""
        return sum(2 if e.kind == "pair" else 1 for e in self.entries)

    def generator_set(self) -> GeneratorSet:
        gens = []
        for e in self.entries:
            if e.kind == "pair":
                for w in e.words:
                    gens.append(_trace_generator(w))
            elif e.kind == "single":
                gens.append(_trace_generator(e.words[0]))
            else:
                w1, w2 = e.words
                expr = InvariantExpression(
                    InvariantExpression.trace_of(w1).atoms + InvariantExpression.trace_of(w2).atoms
                )
                gens.append(Generator(f"{w1.text}+{w2.text}", expr, expr.total_degree, expr.bidegree))
        return GeneratorSet("c52-msg171", tuple(gens), TWO_GENERIC, 5)


def _trace_generator(w: Word) -> Generator:
    expr = InvariantExpression.trace_of(w)
    return Generator(w.text, expr, w.degree, w.bidegree)


def _data_text(fname: str) -> str:
    return resources.files(__package__).joinpath("data", fname).read_text(encoding="utf-8")


def _data_lines(fname: str):
    for line in _data_text(fname).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _load_word_list(fname: str):
    return tuple(parse_word(line) for line in _data_lines(fname))


def _load_labeled_invariants(fname: str):
    out = []
    for line in _data_lines(fname):
        label, text = (part.strip() for part in line.split(":", 1))
        out.append((label, parse_invariant(text)))
    return out


def _load_table3(fname: str) -> Table3:
    entries = []
    for line in _data_lines(fname):
        if line.startswith("pair:"):
            w1, w2 = (parse_word(p.strip()) for p in line[len("pair:"):].split("|"))
            entries.append(Table3Entry("pair", (w1, w2)))
        elif line.startswith("sum:"):
            w1, w2 = (parse_word(p.strip()) for p in line[len("sum:"):].split("+"))
            entries.append(Table3Entry("sum", (w1, w2)))
        else:
            entries.append(Table3Entry("single", (parse_word(line),)))
    return Table3(tuple(entries))


def _word_set(name: str, fname: str, n: int) -> GeneratorSet:
    return GeneratorSet(name, tuple(_trace_generator(w) for w in _load_word_list(fname)),
                        TRANSPOSE_BOUND, n)


def _labeled_set(name: str, fname: str, n: int) -> GeneratorSet:
    gens = []
    for label, expr in _load_labeled_invariants(fname):
        if expr.total_degree is None:
            raise CatalogError(f"{name}: generator {label} is not homogeneous")
        gens.append(Generator(label, expr, expr.total_degree, expr.bidegree))
    return GeneratorSet(name, tuple(gens), TRANSPOSE_BOUND, n)


def _subset(gs: GeneratorSet, labels, name: str) -> GeneratorSet:
    return GeneratorSet(name, tuple(gs.by_label(l) for l in labels), gs.mode, gs.n)


# printed Taylor expansions (degree 0 upward) used as references where the
# rational form is either checked against them or not expandable at all
S4_TAYLOR = (1, 0, 3, 2, 10, 7, 29, 25, 73, 74, 172, 187, 381, 431, 785, 920, 1539, 1827)
S5_TAYLOR = (1, 0, 2, 2, 7, 8, 20, 26, 60, 82, 164, 236, 437, 640, 1104, 1634, 2678, 3940, 6206)


def krull_dimension(n: int) -> int:
    return n * (n + 1) // 2 - 1


def syzygy_polynomials():
    """The exact rational coefficients c1, c2 of the order-3 quadratic relation
    satisfied by the sixth generator: E6^2 + c1*E6 + c2 = 0."""
    E1, E2, E3, E4, E5 = (GenPoly.var(f"E{i}") for i in range(1, 6))
    c1 = (E3 ** 2 - 3 * E2 * E5 - 3 * E4 ** 2) / 3
    c2 = (
        72 * E1 ** 4 * E5
        + 144 * E5 * (E1 * E3 * E4 + E5 ** 2)
        + 16 * E3 ** 2 * (E2 ** 3 + E3 ** 2)
        + 24 * E1 ** 2 * E2 * E3 * (E3 + E4)
        - 3 * E1 * (E1 ** 2 + E2 ** 2) * (16 * E3 * E4 + 3 * E1 ** 3)
        + 36 * E1 ** 2 * (E1 * E4 ** 2 + E2 ** 2 * E5 - 5 * E5 ** 2)
        + 96 * E3 * E4 ** 2 * (E4 - E3)
        + 144 * E4 ** 2 * E5 * (E2 - E1)
        - 4 * E3 ** 2 * (E1 ** 3 + 24 * E2 * E5)
    ) / 144
    return c1, c2


def syzygy_relation() -> GenPoly:
    c1, c2 = syzygy_polynomials()
    E6 = GenPoly.var("E6")
    return E6 ** 2 + c1 * E6 + c2


def module_basis16(s4: GeneratorSet):
    """Identity, the eleven V's, and the four stated products V1V2, V2V3,
    V2V4, V6V10 (degree bookkeeping of the last two is checked, not assumed)."""
    v = {f"V{i}": GenPoly.var(f"V{i}") for i in range(1, 12)}
    basis = [GenPoly.const(1)] + [v[f"V{i}"] for i in range(1, 12)]
    basis += [v["V1"] * v["V2"], v["V2"] * v["V3"], v["V2"] * v["V4"], v["V6"] * v["V10"]]
    return tuple(basis)


def _series_s5() -> RationalSeries:
    # numerator exponents 21..30 are elided in the source ("+...+"); the gap
    # marker blocks expansion, so order-5 comparisons use S5_TAYLOR instead
    num = {0: 1, 5: 1, 6: 3, 7: 4, 8: 8, 9: 8, 10: 15, 11: 15, 12: 24, 13: 26, 14: 34,
           15: 41, 16: 46, 17: 50, 18: 52, 19: 52, 20: 50, 31: 3, 32: 1, 37: 1}
    return RationalSeries({(e,): c for e, c in num.items()},
                          tuple((m,) for m in (2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 8)),
                          nvars=1, numerator_gap=(21, 30))


def _load_bivariate_table() -> CoefficientTable:
    entries = {}
    for line in _data_lines("c52_bigraded_table.txt"):
        i, j, c = (int(p) for p in line.split())
        entries[(i, j)] = c
    return table_from_entries(entries, cap=15, nvars=2)


_cache: dict = {}


def _build(name: str) -> CatalogEntry:
    if name == "S3_E6":
        return CatalogEntry(name, _labeled_set("s3-generators", "s3_generators.txt", 3),
                            "order-3 generator table (E1..E6)")
    if name == "S3_HSOP":
        full = get("S3_E6").payload
        return CatalogEntry(name, _subset(full, [f"E{i}" for i in range(1, 6)], "s3-hsop"),
                            "order-3 parameter system (E1..E5)")
    if name == "S3_SYZYGY":
        return CatalogEntry(name, syzygy_polynomials(), "order-3 syzygy coefficients c1, c2")
    if name == "S4_UV20":
        gs = _labeled_set("s4-generators", "s4_generators.txt", 4)
        if len(gs.generators) != 20:
            raise CatalogError("order-4 table must have 20 generators")
        return CatalogEntry(name, gs, "order-4 generator table (U1..U9, V1..V11)")
    if name == "S4_HSOP_U9":
        full = get("S4_UV20").payload
        return CatalogEntry(name, _subset(full, [f"U{i}" for i in range(1, 10)], "s4-hsop"),
                            "order-4 parameter system (U1..U9)")
    if name == "S4_MODULE_BASIS16":
        return CatalogEntry(name, module_basis16(get("S4_UV20").payload),
                            "order-4 stated 16-element module basis")
    if name == "S5_MSG89":
        gs = _word_set("s5-msg89", "s5_msg89.txt", 5)
        if len(gs.generators) != 89:
            raise CatalogError("order-5 generating table must have 89 words")
        return CatalogEntry(name, gs, "order-5 minimal generating set (89 words)")
    if name == "S5_HSOP14_CONJ":
        return CatalogEntry(name, _word_set("s5-hsop14", "s5_hsop14.txt", 5),
                            "order-5 conjectured parameter system (14 words)")
    if name == "S5_REDUNDANT9":
        return CatalogEntry(name, _load_word_list("s5_redundant9.txt"),
                            "order-5 redundant words (9)")
    if name == "C52_MSG171":
        t3 = _load_table3("c52_msg171.txt")
        if t3.matrix_count != 171:
            raise CatalogError(f"two-matrix table lists {t3.matrix_count} matrices, expected 171")
        return CatalogEntry(name, t3, "star-invariant generating table (171 matrices)")
    if name == "SERIES_SO2":
        return CatalogEntry(name, univariate({0: 1}, [1, 2]), "order-2 proper-rotation series")
    if name == "SERIES_O2":
        return CatalogEntry(name, univariate({0: 1}, [2, 2]), "order-2 full-orthogonal series")
    if name == "SERIES_S3":
        return CatalogEntry(name, univariate({0: 1, 6: 1}, [2, 2, 3, 3, 4]), "order-3 series")
    if name == "SERIES_S4":
        num = {0: 1, 4: 1, 5: 1, 6: 3, 7: 2, 8: 2, 9: 3, 10: 1, 11: 1, 15: 1}
        return CatalogEntry(name, univariate(num, [2, 2, 2, 3, 3, 4, 4, 4, 6]), "order-4 series")
    if name == "SERIES_S5":
        return CatalogEntry(name, _series_s5(),
                            "order-5 series, printed with elided numerator middle terms")
    if name == "BIVARIATE_C52_TABLE":
        return CatalogEntry(name, _load_bivariate_table(),
                            "printed bigraded dimension table through total degree 15")
    raise CatalogError(f"unknown catalog entry {name!r}; available: {', '.join(NAMES)}")


NAMES = (
    "S3_E6", "S3_HSOP", "S3_SYZYGY", "S4_UV20", "S4_HSOP_U9", "S4_MODULE_BASIS16",
    "S5_MSG89", "S5_HSOP14_CONJ", "S5_REDUNDANT9", "C52_MSG171",
    "SERIES_SO2", "SERIES_O2", "SERIES_S3", "SERIES_S4", "SERIES_S5",
    "BIVARIATE_C52_TABLE",
)


def get(name: str) -> CatalogEntry:
    if name not in _cache:
        _cache[name] = _build(name)
    return _cache[name]


@dataclass(frozen=True)
class StructuralCounts:
    table3_pairs: int
    table3_singles: int
    table3_sums: int
    table3_matrices: int
    table2_words: int
    substituted_set_size: int
    redundant_words: int
    krull_by_order: dict
    hsop_sizes: dict

    @property
    def ok(self) -> bool:
        return (
            self.table3_pairs == 73
            and self.table3_singles == 25
            and self.table3_sums == 3
            and self.table3_matrices == 171
            and self.table2_words == 89
            and self.substituted_set_size - self.redundant_words == self.table2_words
            and all(self.krull_by_order[n] == self.hsop_sizes[n] for n in (3, 4, 5))
        )


def structural_counts() -> StructuralCounts:
    """Cross-checks every count the tables imply; a mismatch is a data-entry bug."""
    t3 = get("C52_MSG171").payload
    pairs = sum(1 for e in t3.entries if e.kind == "pair")
    sums = sum(1 for e in t3.entries if e.kind == "sum")
    singles = sum(1 for e in t3.entries if e.kind != "pair")
    counts = StructuralCounts(
        table3_pairs=pairs,
        table3_singles=singles,
        table3_sums=sums,
        table3_matrices=t3.matrix_count,
        table2_words=len(get("S5_MSG89").payload.generators),
        substituted_set_size=pairs + singles,
        redundant_words=len(get("S5_REDUNDANT9").payload),
        krull_by_order={n: krull_dimension(n) for n in (3, 4, 5)},
        hsop_sizes={
            3: len(get("S3_HSOP").payload.generators),
            4: len(get("S4_HSOP_U9").payload.generators),
            5: len(get("S5_HSOP14_CONJ").payload.generators),
        },
    )
    if not counts.ok:
        raise CatalogError(f"structural count mismatch: {counts}")
    return counts


@dataclass(frozen=True)
class StarCheckResult:
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def star_table3_check() -> StarCheckResult:
    """Star-invariance of the 171-entry table: pairs are {w, w*} up to cyclic
    rotation, singles are star-fixed up to rotation, and each sum entry's
    second word is exactly the star of the first."""
    t3 = get("C52_MSG171").payload
    violations = []
    for e in t3.entries:
        if e.kind == "pair":
            w1, w2 = e.words
            if cyclic_normal_form(star(w1)) != cyclic_normal_form(w2):
                violations.append(f"pair {w1.text} | {w2.text}: partner is not the star")
        elif e.kind == "single":
            w = e.words[0]
            if cyclic_normal_form(star(w)) != cyclic_normal_form(w):
                violations.append(f"single {w.text}: not star-fixed")
        else:
            w1, w2 = e.words
            if star(w1) != w2:
                violations.append(f"sum {w1.text} + {w2.text}: second summand is not the star")
    return StarCheckResult(len(t3.entries), tuple(violations))
