"""Words in two letters, invariant expressions, and their evaluation.

A word is a finite sequence over {x, y}; a matrix expression is an integer
combination of words in normalized sum-of-words form; an invariant expression
is a rational combination of Trace / Pf / Pl atoms over matrix expressions.
Here Pf denotes the extended pfaffian pf(M - M^T) and pl its polarization,
the st-coefficient of Pf(sM1 + tM2), which for 4x4 matrices equals
Pf(M1+M2) - Pf(M1) - Pf(M2) exactly because Pf is quadratic in the entries.

Parsing accepts x/y (aliases A/B), caret exponents and parenthesized groups,
so table entries like ``(xy)^2`` or ``Pf(A^2(A+B))`` ingest verbatim.
Canonical printing always uses flat x/y runs with caret exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .batch import ModOps
from .modular import PrimeField, SamplePoint, mat_add, mat_mul, mat_scale, mat_sub, mat_trace, mat_transpose

X = "x"
Y = "y"

_ALIASES = {"x": X, "y": Y, "A": X, "B": Y}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Word:
    """Nonempty sequence of letters over {x, y}."""

    letters: tuple

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def bidegree(self) -> tuple:
        nx = sum(1 for c in self.letters if c == X)
        return (nx, len(self.letters) - nx)

    @property
    def text(self) -> str:
        out = []
        i = 0
        ls = self.letters
        while i < len(ls):
            j = i
            while j < len(ls) and ls[j] == ls[i]:
                j += 1
            run = j - i
            out.append(ls[i] if run == 1 else f"{ls[i]}^{run}")
            i = j
        return "".join(out)

    def __repr__(self):
        return f"Word({self.text!r})"


def word(text: str) -> Word:
    return parse_word(text)


def star(w: Word) -> Word:
    """Swap x and y, then reverse the letter order (order immaterial)."""
    swapped = tuple(Y if c == X else X for c in w.letters)
    return Word(swapped[::-1])


def rotations(w: Word):
    ls = w.letters
    return [Word(ls[i:] + ls[:i]) for i in range(len(ls))]


def cyclic_normal_form(w: Word) -> Word:
    """Lexicographically least rotation of the letter sequence."""
    ls = w.letters
    best = min(ls[i:] + ls[:i] for i in range(len(ls)))
    return Word(best)


# ---------------------------------------------------------------------------
# parsing

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected unsigned integer", start)
        return int(self.text[start : self.pos])

    def exponent(self) -> int:
        if self.peek() == "^":
            self.pos += 1
            at = self.pos
            e = self.uint()
            if e == 0:
                raise ParseError("zero exponent not allowed", at)
            return e
        return 1


def _parse_word_body(sc: _Scanner, stop: str = "") -> tuple:
    letters = []
    while True:
        c = sc.peek()
        if c == "" or c in stop:
            break
        if c in _ALIASES:
            sc.take()
            letters.extend([_ALIASES[c]] * sc.exponent())
        elif c == "(":
            sc.take()
            inner = _parse_word_body(sc, stop=")")
            sc.expect(")")
            if not inner:
                raise ParseError("empty group", sc.pos)
            letters.extend(list(inner) * sc.exponent())
        else:
            raise ParseError(f"unexpected character {c!r}", sc.pos)
    return tuple(letters)


def parse_word(text: str) -> Word:
    """Parse a plain word: letters x/y (or A/B), caret exponents, groups."""
    sc = _Scanner(text)
    letters = _parse_word_body(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        raise ParseError("trailing input", sc.pos)
    if not letters:
        raise ParseError("empty word", 0)
    return Word(letters)


@dataclass(frozen=True)
class MatrixExpression:
    """Normalized integer combination of words: distinct words, nonzero
    coefficients, canonical (degree, letters) order."""

    terms: tuple  # of (int, Word)

    @staticmethod
    def from_terms(raw) -> "MatrixExpression":
        acc = {}
        for coef, w in raw:
            acc[w.letters] = acc.get(w.letters, 0) + coef
        terms = tuple(
            (c, Word(ls)) for ls, c in sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])) if c != 0
        )
        return MatrixExpression(terms)

    @staticmethod
    def of_word(w: Word) -> "MatrixExpression":
        return MatrixExpression(((1, w),))

    @property
    def entry_degree(self):
        degs = {w.degree for _, w in self.terms}
        return degs.pop() if len(degs) == 1 else None

    @property
    def entry_bidegree(self):
        bidegs = {w.bidegree for _, w in self.terms}
        return bidegs.pop() if len(bidegs) == 1 else None

    @property
    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coef, w in self.terms:
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            body = w.text if mag == 1 else f"{mag}{w.text}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = (head_sign if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += sign + body
        return out


def _parse_mexpr_sum(sc: _Scanner):
    """sum := [uint] product (('+'|'-') [uint] product)*  -> list of (coef, letters)."""
    terms = []
    sign = 1
    first = True
    while True:
        c = sc.peek()
        if not first:
            if c == "+":
                sc.take()
                sign = 1
            elif c == "-":
                sc.take()
                sign = -1
            else:
                break
        coef = sign
        if sc.peek().isdigit():
            coef = sign * sc.uint()
        prod = _parse_mexpr_product(sc)
        terms.extend((coef * c2, ls) for c2, ls in prod)
        first = False
        sign = 1
    return terms


def _parse_mexpr_product(sc: _Scanner):
    """product of factors; each factor is a letter^k or (sum)^k."""
    terms = [(1, ())]
    seen = False
    while True:
        c = sc.peek()
        if c in _ALIASES:
            sc.take()
            piece = [(1, tuple([_ALIASES[c]] * sc.exponent()))]
        elif c == "(":
            sc.take()
            inner = _parse_mexpr_sum(sc)
            sc.expect(")")
            piece = inner
            for _ in range(sc.exponent() - 1):
                piece = [(c1 * c2, l1 + l2) for c1, l1 in piece for c2, l2 in inner]
        else:
            break
        terms = [(c1 * c2, l1 + l2) for c1, l1 in terms for c2, l2 in piece]
        seen = True
    if not seen:
        raise ParseError("expected matrix expression", sc.pos)
    return terms


def parse_matrix_expression(text: str) -> MatrixExpression:
    sc = _Scanner(text)
    raw = _parse_mexpr_sum(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        raise ParseError("trailing input", sc.pos)
    return MatrixExpression.from_terms((c, Word(ls)) for c, ls in raw if ls)


TRACE = "tr"
PF = "Pf"
PL = "pl"


@dataclass(frozen=True)
class Atom:
    """One Trace / Pf / Pl atom with a rational coefficient."""

    coefficient: Fraction
    kind: str
    args: tuple  # one or two MatrixExpressions

    @property
    def total_degree(self):
        degs = [a.entry_degree for a in self.args]
        if any(d is None for d in degs):
            return None
        if self.kind == TRACE:
            return degs[0]
        if self.kind == PF:
            return 2 * degs[0]
        return degs[0] + degs[1]

    @property
    def bidegree(self):
        bds = [a.entry_bidegree for a in self.args]
        if any(b is None for b in bds):
            return None
        if self.kind == TRACE:
            return bds[0]
        if self.kind == PF:
            return (2 * bds[0][0], 2 * bds[0][1])
        return (bds[0][0] + bds[1][0], bds[0][1] + bds[1][1])

    @property
    def text(self) -> str:
        inner = ",".join(a.text for a in self.args)
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class InvariantExpression:
    """Rational combination of atoms, with degree metadata.

    Total degree is defined when all atoms share one degree; bidegree only
    when additionally every expanded word shares one bidegree (a Pf atom over
    mixed-bidegree words, like Pf A^2(A+B), carries total degree only).
    """

    atoms: tuple

    @property
    def total_degree(self):
        degs = {a.total_degree for a in self.atoms}
        if len(degs) == 1 and None not in degs:
            return degs.pop()
        return None

    @property
    def bidegree(self):
        bds = {a.bidegree for a in self.atoms}
        if len(bds) == 1 and None not in bds:
            return bds.pop()
        return None

    @property
    def text(self) -> str:
        parts = []
        for a in self.atoms:
            c = a.coefficient
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = a.text if mag == 1 else f"{mag}{a.text}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = (head_sign if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += sign + body
        return out

    @staticmethod
    def trace_of(w: Word, coefficient=1) -> "InvariantExpression":
        return InvariantExpression((Atom(Fraction(coefficient), TRACE, (MatrixExpression.of_word(w),)),))


def parse_invariant(text: str) -> InvariantExpression:
    """inv := term (('+'|'-') term)*; term := [uint] atom;
    atom := tr(mexpr) | Pf(mexpr) | pl(mexpr, mexpr)."""
    sc = _Scanner(text)
    atoms = []
    first = True
    while True:
        c = sc.peek()
        if c == "" and not first:
            break
        sign = 1
        if not first:
            if c == "+":
                sc.take()
            elif c == "-":
                sc.take()
                sign = -1
            else:
                raise ParseError("expected '+' or '-'", sc.pos)
        coef = Fraction(sign)
        if sc.peek().isdigit():
            coef = sign * Fraction(sc.uint())
        kind = None
        for k in (TRACE, PF, PL):
            if sc.text.startswith(k, sc.pos):
                kind = k
                break
        if kind is None:
            raise ParseError("expected tr, Pf or pl", sc.pos)
        sc.pos += len(kind)
        sc.expect("(")
        args = [_parse_arg(sc)]
        if kind == PL:
            sc.expect(",")
            args.append(_parse_arg(sc))
        elif sc.peek() == ",":
            raise ParseError(f"{kind} takes one argument", sc.pos)
        sc.expect(")")
        atoms.append(Atom(coef, kind, tuple(args)))
        first = False
        sc.skip_ws()
        if sc.pos == len(text):
            break
    if not atoms:
        raise ParseError("empty invariant expression", 0)
    return InvariantExpression(tuple(atoms))


def _parse_arg(sc: _Scanner) -> MatrixExpression:
    raw = _parse_mexpr_sum(sc)
    return MatrixExpression.from_terms((c, Word(ls)) for c, ls in raw if ls)


# ---------------------------------------------------------------------------
# scalar evaluation (ring-generic; works over PrimeField and DualRing)

def evaluate_word_matrices(w: Word, x, y, ring):
    acc = None
    for c in w.letters:
        m = x if c == X else y
        acc = m if acc is None else mat_mul(acc, m, ring)
    return acc


def evaluate_matrix_expression_matrices(e: MatrixExpression, x, y, ring):
    n = len(x)
    acc = [[ring.zero] * n for _ in range(n)]
    for coef, w in e.terms:
        m = evaluate_word_matrices(w, x, y, ring)
        acc = mat_add(acc, mat_scale(ring.of_int(coef), m, ring), ring)
    return acc


def evaluate_matrix_expression(e: MatrixExpression, pt: SamplePoint, field: PrimeField):
    return evaluate_matrix_expression_matrices(e, pt.x, pt.y, field)


def pfaffian(m: Sequence, ring):
    """Pfaffian of an even-order skew-symmetric matrix by first-row expansion."""
    n = len(m)
    if n % 2 != 0:
        raise ValueError(f"pfaffian needs even order, got {n}")
    for i in range(n):
        if m[i][i] != ring.zero:
            raise ValueError("pfaffian needs zero diagonal")
        for j in range(i + 1, n):
            if m[i][j] != ring.neg(m[j][i]):
                raise ValueError("pfaffian needs a skew-symmetric matrix")
    return _pf_expand(list(map(list, m)), ring)


def _pf_expand(m, ring):
    n = len(m)
    if n == 0:
        return ring.one
    acc = ring.zero
    for j in range(1, n):
        minor = [
            [m[r][c] for c in range(1, n) if c != j]
            for r in range(1, n)
            if r != j
        ]
        term = ring.mul(m[0][j], _pf_expand(minor, ring))
        acc = ring.add(acc, term) if j % 2 == 1 else ring.sub(acc, term)
    return acc


def cap_pf_matrix(m, ring):
    """Extended pfaffian Pf M = pf(M - M^T) for an arbitrary square matrix."""
    skew = mat_sub(m, mat_transpose(m), ring)
    return _pf_expand(skew, ring)  # m - m^T is skew by construction

def cap_pf(e: MatrixExpression, pt: SamplePoint, field: PrimeField):
    if pt.n % 2 != 0:
        raise ValueError(f"Pf needs even matrix order, got {pt.n}")
    return cap_pf_matrix(evaluate_matrix_expression(e, pt, field), field)


def polarized_pf(e1: MatrixExpression, e2: MatrixExpression, pt: SamplePoint, field: PrimeField):
    """st-coefficient of Pf(s M1 + t M2); exact since Pf is quadratic.  4x4 only."""
    if pt.n != 4:
        raise ValueError(f"polarized pfaffian is defined here for order 4 only, got {pt.n}")
    m1 = evaluate_matrix_expression(e1, pt, field)
    m2 = evaluate_matrix_expression(e2, pt, field)
    both = cap_pf_matrix(mat_add(m1, m2, field), field)
    return field.sub(field.sub(both, cap_pf_matrix(m1, field)), cap_pf_matrix(m2, field))


def evaluate_atom_matrices(atom: Atom, x, y, ring):
    n = len(x)
    if atom.kind == TRACE:
        val = mat_trace(evaluate_matrix_expression_matrices(atom.args[0], x, y, ring), ring)
    elif atom.kind == PF:
        if n % 2 != 0:
            raise ValueError(f"Pf atom needs even matrix order, got {n}")
        val = cap_pf_matrix(evaluate_matrix_expression_matrices(atom.args[0], x, y, ring), ring)
    else:
        if n != 4:
            raise ValueError(f"pl atom is defined here for order 4 only, got {n}")
        m1 = evaluate_matrix_expression_matrices(atom.args[0], x, y, ring)
        m2 = evaluate_matrix_expression_matrices(atom.args[1], x, y, ring)
        both = cap_pf_matrix(mat_add(m1, m2, ring), ring)
        val = ring.sub(ring.sub(both, cap_pf_matrix(m1, ring)), cap_pf_matrix(m2, ring))
    return ring.mul(ring.of_rational(atom.coefficient), val)


def evaluate_invariant_matrices(inv: InvariantExpression, x, y, ring):
    acc = ring.zero
    for atom in inv.atoms:
        acc = ring.add(acc, evaluate_atom_matrices(atom, x, y, ring))
    return acc


def evaluate_invariant(inv: InvariantExpression, pt: SamplePoint, field: PrimeField):
    return evaluate_invariant_matrices(inv, pt.x, pt.y, field)


# ---------------------------------------------------------------------------
# batched evaluation over (P, n, n) int64 arrays

def evaluate_word_batch(w: Word, xb: np.ndarray, yb: np.ndarray, ops: ModOps) -> np.ndarray:
    acc = None
    for c in w.letters:
        m = xb if c == X else yb
        acc = m if acc is None else ops.matmul(acc, m)
    return acc


def evaluate_matrix_expression_batch(e: MatrixExpression, xb, yb, ops: ModOps) -> np.ndarray:
    acc = ops.zeros(xb.shape)
    for coef, w in e.terms:
        term = evaluate_word_batch(w, xb, yb, ops)
        acc = ops.add(acc, ops.mul(term, coef % ops.p))
    return acc


def _cap_pf_batch(m: np.ndarray, ops: ModOps) -> np.ndarray:
    if m.shape[-1] != 4:
        raise ValueError("batched Pf implemented for order 4 only")
    return ops.pfaffian4(ops.sub(m, ops.transpose(m)))


def evaluate_atom_batch(atom: Atom, xb, yb, ops: ModOps, field: PrimeField) -> np.ndarray:
    if atom.kind == TRACE:
        val = ops.trace(evaluate_matrix_expression_batch(atom.args[0], xb, yb, ops))
    elif atom.kind == PF:
        val = _cap_pf_batch(evaluate_matrix_expression_batch(atom.args[0], xb, yb, ops), ops)
    else:
        m1 = evaluate_matrix_expression_batch(atom.args[0], xb, yb, ops)
        m2 = evaluate_matrix_expression_batch(atom.args[1], xb, yb, ops)
        both = _cap_pf_batch(ops.add(m1, m2), ops)
        val = ops.sub(ops.sub(both, _cap_pf_batch(m1, ops)), _cap_pf_batch(m2, ops))
    return ops.mul(val, field.of_rational(atom.coefficient))


def evaluate_invariant_batch(inv: InvariantExpression, xb, yb, ops: ModOps) -> np.ndarray:
    field = PrimeField(ops.p)
    acc = None
    for atom in inv.atoms:
        v = evaluate_atom_batch(atom, xb, yb, ops, field)
        acc = v if acc is None else ops.add(acc, v)
    return acc
