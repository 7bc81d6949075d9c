"""Sparse multivariate polynomials with exact rational coefficients.

Three variable bases share one representation:

* ``lambda`` — the ``n`` weight variables ``l1, ..., ln``,
* ``alpha``  — the ``n-1`` simple-root variables ``a_i = l_i - l_{i+1}``,
* ``chern``  — the ``n`` ring generators ``x1, ..., xn`` used for Schubert
  calculus.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients; the zero polynomial is the empty map.  Terms are serialized in
descending lexicographic order of the exponent tuple so that rendered output
is byte-stable.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]

LAMBDA = "lambda"
ALPHA = "alpha"
CHERN = "chern"

_VAR_LETTER = {LAMBDA: "l", ALPHA: "a", CHERN: "x"}


def _nvars(basis: str, n: int) -> int:
    if basis in (LAMBDA, CHERN):
        return n
    if basis == ALPHA:
        return n - 1
    raise ValueError(f"unknown basis {basis!r}")


@dataclass(frozen=True)
class ExactPolynomial:
    """Immutable sparse polynomial over Q in a tagged variable basis."""

    basis: str
    n: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        nv = _nvars(self.basis, self.n)
        clean = {}
        for exp, c in self.terms.items():
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} has wrong arity for {self.basis}(n={self.n})")
            c = Fraction(c)
            if c != 0:
                clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    @property
    def nvars(self) -> int:
        return _nvars(self.basis, self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending lex order of exponent (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return add(self, other)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return add(self, scale(other, Fraction(-1)))

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return multiply(self, other)

    def __str__(self) -> str:
        return render(self)


def zero(basis: str, n: int) -> ExactPolynomial:
    return ExactPolynomial(basis, n, {})


def constant(basis: str, n: int, c: int | Fraction) -> ExactPolynomial:
    return ExactPolynomial(basis, n, {(0,) * _nvars(basis, n): Fraction(c)})


def variable(basis: str, n: int, i: int) -> ExactPolynomial:
    """The i-th variable (1-based) as a polynomial."""
    nv = _nvars(basis, n)
    if not 1 <= i <= nv:
        raise ValueError(f"variable index {i} out of range for {basis}(n={n})")
    exp = [0] * nv
    exp[i - 1] = 1
    return ExactPolynomial(basis, n, {tuple(exp): Fraction(1)})


def monomial(basis: str, n: int, exp: Exponent, c: int | Fraction = 1) -> ExactPolynomial:
    return ExactPolynomial(basis, n, {tuple(exp): Fraction(c)})


def _check_same_basis(p: ExactPolynomial, q: ExactPolynomial):
    if p.basis != q.basis or p.n != q.n:
        raise ValueError(f"basis mismatch: {p.basis}(n={p.n}) vs {q.basis}(n={q.n})")


def add(p: ExactPolynomial, q: ExactPolynomial) -> ExactPolynomial:
    _check_same_basis(p, q)
    terms = dict(p.terms)
    for exp, c in q.terms.items():
        terms[exp] = terms.get(exp, Fraction(0)) + c
    return ExactPolynomial(p.basis, p.n, terms)


def scale(p: ExactPolynomial, c: int | Fraction) -> ExactPolynomial:
    c = Fraction(c)
    return ExactPolynomial(p.basis, p.n, {e: v * c for e, v in p.terms.items()})


def multiply(p: ExactPolynomial, q: ExactPolynomial) -> ExactPolynomial:
    _check_same_basis(p, q)
    terms: dict[Exponent, Fraction] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            terms[e] = terms.get(e, Fraction(0)) + c1 * c2
    return ExactPolynomial(p.basis, p.n, terms)


def partial_derivative(p: ExactPolynomial, i: int) -> ExactPolynomial:
    """Formal derivative with respect to ``l_i``; lambda basis only."""
    if p.basis != LAMBDA:
        raise ValueError("partial derivatives are defined on the lambda basis only")
    if not 1 <= i <= p.nvars:
        raise ValueError(f"derivative index {i} out of range for n={p.n}")
    terms: dict[Exponent, Fraction] = {}
    for exp, c in p.terms.items():
        e = exp[i - 1]
        if e == 0:
            continue
        new = list(exp)
        new[i - 1] = e - 1
        key = tuple(new)
        terms[key] = terms.get(key, Fraction(0)) + c * e
    return ExactPolynomial(LAMBDA, p.n, terms)


def apply_operator_product(p: ExactPolynomial, pairs: Iterable[tuple[int, int]]) -> ExactPolynomial:
    """Apply the product of difference operators ``prod (d_j - d_i)``.

    The factors commute, so the iteration order is immaterial; the empty
    product is the identity.
    """
    out = p
    for j, i in pairs:
        out = partial_derivative(out, j) - partial_derivative(out, i)
    return out


def is_translation_invariant(p: ExactPolynomial) -> bool:
    """True iff ``p(l + t*(1,...,1)) == p(l)``, i.e. the directional
    derivative along (1, ..., 1) vanishes identically."""
    if p.basis != LAMBDA:
        raise ValueError("translation invariance applies to the lambda basis")
    total = zero(LAMBDA, p.n)
    for i in range(1, p.n + 1):
        total = total + partial_derivative(p, i)
    return total.is_zero()


def to_alpha_basis(p: ExactPolynomial) -> ExactPolynomial:
    """Rewrite a translation-invariant lambda polynomial in the variables
    ``a_i = l_i - l_{i+1}`` by substituting ``l_i = a_i + ... + a_{n-1}``,
    ``l_n = 0``.  Raises on inputs that are not translation invariant (the
    substitution would silently forget information)."""
    if p.basis != LAMBDA:
        raise ValueError("to_alpha_basis expects a lambda-basis polynomial")
    if not is_translation_invariant(p):
        raise ValueError("polynomial is not invariant under l_i -> l_i + c; no alpha form")
    n = p.n
    # l_i as an alpha polynomial: sum of a_i..a_{n-1}
    subs = []
    for i in range(1, n + 1):
        terms = {}
        for k in range(i, n):
            e = [0] * (n - 1)
            e[k - 1] = 1
            terms[tuple(e)] = Fraction(1)
        subs.append(ExactPolynomial(ALPHA, n, terms))
    out = zero(ALPHA, n)
    cache: dict[tuple[int, int], ExactPolynomial] = {}

    def power(i: int, e: int) -> ExactPolynomial:
        if (i, e) not in cache:
            if e == 0:
                cache[(i, e)] = constant(ALPHA, n, 1)
            else:
                cache[(i, e)] = multiply(power(i, e - 1), subs[i - 1])
        return cache[(i, e)]

    for exp, c in p.terms.items():
        term = constant(ALPHA, n, c)
        for i, e in enumerate(exp, start=1):
            if e:
                term = multiply(term, power(i, e))
        out = out + term
    return out


def alpha_point(lam: Iterable[int | Fraction]) -> tuple[Fraction, ...]:
    """Consecutive differences of a lambda point: the matching alpha point."""
    lam = [Fraction(v) for v in lam]
    return tuple(lam[i] - lam[i + 1] for i in range(len(lam) - 1))


def evaluate(p: ExactPolynomial, point: Iterable[int | Fraction]) -> Fraction:
    vals = [Fraction(v) for v in point]
    if len(vals) != p.nvars:
        raise ValueError(f"point has {len(vals)} coordinates, expected {p.nvars}")
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for v, e in zip(vals, exp):
            if e:
                term *= v**e
        total += term
    return total


def render(p: ExactPolynomial) -> str:
    """Human-readable form, e.g. ``1/2*a1^2*a2 + 1/2*a1*a2^2``."""
    if p.is_zero():
        return "0"
    letter = _VAR_LETTER[p.basis]
    pieces = []
    for exp, c in p.sorted_terms():
        vars_part = "*".join(
            f"{letter}{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exp, start=1)
            if e > 0
        )
        mag = abs(c)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        pieces.append((c < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def to_json_dict(p: ExactPolynomial) -> dict:
    return {
        "basis": p.basis,
        "n": p.n,
        "terms": [
            {"coeff": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator),
             "exp": list(exp)}
            for exp, c in p.sorted_terms()
        ],
    }


def to_json(p: ExactPolynomial) -> str:
    return json.dumps(to_json_dict(p))


def from_json_dict(d: dict) -> ExactPolynomial:
    terms = {tuple(t["exp"]): Fraction(t["coeff"]) for t in d["terms"]}
    return ExactPolynomial(d["basis"], d["n"], terms)


def from_json(s: str) -> ExactPolynomial:
    return from_json_dict(json.loads(s))
