"""Exact Schubert calculus in the Borel presentation.

Cohomology classes are represented by polynomials in the generators
``x_1, ..., x_n`` (the ``chern`` basis of :mod:`gzhess.poly`).  The class of
codimension ``len(w)`` dual to the permutation ``w`` is the Schubert
polynomial ``S_w``, normalized by ``S_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1}``
and ``divided_difference(S_w, i) = S_{w s_i}`` whenever the length drops.

Conventions (locked by tests against the worked n = 3, 4 decompositions):

* classes of codimension ``len(w)`` correspond to ``S_w``; the opposite
  (dimension-indexed) family enters through ``S_{w0 * v}``;
* integration over the full flag manifold is ``apply_word(P, rev word of
  w0)`` followed by taking the constant term -- no quotient-ring reduction is
  needed because the top divided difference kills every Schubert polynomial
  except the staircase one;
* the coefficient of ``S_w`` in a homogeneous ``P`` of degree ``len(w)`` is
  the constant term of the divided-difference chain along the *reversed*
  reduced word of ``w``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from . import poly
from .perms import Permutation, all_permutations, compose, longest_element, reduced_word
from .poly import CHERN, LAMBDA, ExactPolynomial


def divided_difference(p: ExactPolynomial, i: int) -> ExactPolynomial:
    """The operator ``P -> (P - s_i P) / (x_i - x_{i+1})`` on the chern basis.

    Computed monomial by monomial with the closed form for
    ``(x^a y^b - x^b y^a) / (x - y)``, which is an exact quotient by
    construction (the numerator is antisymmetric in ``x_i, x_{i+1}``).
    """
    if p.basis != CHERN:
        raise ValueError("divided differences act on the chern basis")
    if not 1 <= i <= p.n - 1:
        raise ValueError(f"divided difference index {i} out of range for n={p.n}")
    terms: dict[tuple[int, ...], Fraction] = {}
    ia, ib = i - 1, i
    for exp, c in p.terms.items():
        a, b = exp[ia], exp[ib]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # (x^hi y^lo - x^lo y^hi)/(x - y) = sum_{k=lo}^{hi-1} x^k y^{hi+lo-1-k}
        for k in range(lo, hi):
            new = list(exp)
            new[ia], new[ib] = k, hi + lo - 1 - k
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + sign * c
    return ExactPolynomial(CHERN, p.n, terms)


def swap_variables(p: ExactPolynomial, i: int) -> ExactPolynomial:
    """The action of ``s_i`` on the chern variables."""
    if p.basis != CHERN:
        raise ValueError("variable swaps act on the chern basis")
    terms = {}
    for exp, c in p.terms.items():
        new = list(exp)
        new[i - 1], new[i] = new[i], new[i - 1]
        terms[tuple(new)] = c
    return ExactPolynomial(CHERN, p.n, terms)


def apply_word(p: ExactPolynomial, word: Iterable[int]) -> ExactPolynomial:
    out = p
    for i in word:
        out = divided_difference(out, i)
        if out.is_zero():
            break
    return out


@lru_cache(maxsize=None)
def schubert_polynomial(w: Permutation) -> ExactPolynomial:
    """The Schubert polynomial of ``w``, homogeneous of degree ``len(w)``."""
    n = w.n
    w0 = longest_element(n)
    if w == w0:
        exp = tuple(n - i for i in range(1, n + 1))
        return poly.monomial(CHERN, n, exp)
    # climb: find an ascent w(i) < w(i+1); then S_w = d_i S_{w s_i}
    word = list(w.word)
    for i in range(1, n):
        if word[i - 1] < word[i]:
            longer = list(word)
            longer[i - 1], longer[i] = longer[i], longer[i - 1]
            return divided_difference(schubert_polynomial(Permutation(tuple(longer))), i)
    raise AssertionError("unreachable: only w0 has no ascent")


@lru_cache(maxsize=None)
def _w0_reversed_word(n: int) -> tuple[int, ...]:
    return tuple(reversed(reduced_word(longest_element(n))))


@lru_cache(maxsize=None)
def _monomial_integral(n: int, exp: tuple[int, ...]) -> Fraction:
    p = poly.monomial(CHERN, n, exp)
    return apply_word(p, _w0_reversed_word(n)).constant_term()


def integral_flag(p: ExactPolynomial, n: int) -> Fraction:
    """Integration over the flag manifold: nonzero only on the homogeneous
    degree ``n(n-1)/2`` part, where it is the constant term of the top
    divided-difference chain."""
    if p.basis != CHERN or p.n != n:
        raise ValueError("integral expects a chern-basis polynomial of matching n")
    m = n * (n - 1) // 2
    total = Fraction(0)
    for exp, c in p.terms.items():
        if sum(exp) == m:
            total += c * _monomial_integral(n, exp)
    return total


@dataclass(frozen=True)
class SchubertExpansion:
    """A finitely supported rational combination of Schubert classes."""

    n: int
    terms: Mapping[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            if w.n != self.n:
                raise ValueError(f"class size {w.n} does not match n={self.n}")
            c = Fraction(c)
            if c != 0:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    def coefficient(self, w: Permutation) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def is_homogeneous(self) -> bool:
        return len({w.length() for w in self.terms}) <= 1

    def codimension(self) -> int:
        """Common length of the support; requires homogeneity."""
        lengths = {w.length() for w in self.terms}
        if len(lengths) != 1:
            raise ValueError("expansion is not homogeneous")
        return lengths.pop()

    def sorted_terms(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].word)

    def __add__(self, other: "SchubertExpansion") -> "SchubertExpansion":
        if self.n != other.n:
            raise ValueError("size mismatch")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return SchubertExpansion(self.n, terms)

    def polynomial(self) -> ExactPolynomial:
        """The chern-basis representative: sum of coeff * S_w."""
        out = poly.zero(CHERN, self.n)
        for w, c in self.terms.items():
            out = out + poly.scale(schubert_polynomial(w), c)
        return out

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"w": str(w), "coeff": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SchubertExpansion":
        terms = {Permutation.from_string(t["w"]): Fraction(t["coeff"]) for t in d["terms"]}
        return cls(d["n"], terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + f"[{w}]" for w, c in self.sorted_terms()
        )


def expand_in_schubert_basis(p: ExactPolynomial) -> SchubertExpansion:
    """Expand a homogeneous chern polynomial over Schubert classes of S_n.

    The coefficient of ``S_w`` is the constant term after dividing along the
    reversed reduced word of ``w``; support outside S_n (vanishing in the
    cohomology of the flag manifold) is dropped.
    """
    if p.basis != CHERN:
        raise ValueError("expansion expects a chern-basis polynomial")
    if p.is_zero():
        return SchubertExpansion(p.n, {})
    if not p.is_homogeneous():
        raise ValueError("expansion expects a homogeneous polynomial")
    d = p.total_degree()
    terms = {}
    for w in all_permutations(p.n):
        if w.length() != d:
            continue
        c = apply_word(p, tuple(reversed(reduced_word(w)))).constant_term()
        if c != 0:
            terms[w] = c
    return SchubertExpansion(p.n, terms)


def monk_multiply(e: SchubertExpansion, k: int) -> SchubertExpansion:
    """Multiply by the codimension-one class of ``s_k`` via the classical
    rule: ``[s_k] * [w] = sum of [w t_{ab}]`` over ``a <= k < b`` with the
    length rising by exactly one, keeping only classes of S_n."""
    if not 1 <= k <= e.n - 1:
        raise ValueError(f"index {k} out of range for n={e.n}")
    out: dict[Permutation, Fraction] = {}
    for w, c in e.terms.items():
        lw = w.length()
        for a in range(1, k + 1):
            for b in range(k + 1, e.n + 1):
                word = list(w.word)
                word[a - 1], word[b - 1] = word[b - 1], word[a - 1]
                wt = Permutation(tuple(word))
                if wt.length() == lw + 1:
                    out[wt] = out.get(wt, Fraction(0)) + c
    return SchubertExpansion(e.n, out)


def _composition_exponents(total: int, parts: int):
    """All exponent tuples of the given total degree."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _composition_exponents(total - first, parts - 1):
            yield (first,) + rest


def vol_lambda_of_class(e: SchubertExpansion, n: int) -> ExactPolynomial:
    """The volume polynomial of a homogeneous class: pair the class against
    ``(l_1 x_1 + ... + l_n x_n)^d / d!`` under the flag integral, keeping the
    ``l`` variables formal.  The result is a lambda-basis polynomial,
    homogeneous of degree ``d = n(n-1)/2 - codim``."""
    if e.n != n:
        raise ValueError("size mismatch")
    m = n * (n - 1) // 2
    if not e.terms:
        return poly.zero(LAMBDA, n)
    d = m - e.codimension()
    rep = e.polynomial()
    out_terms: dict[tuple[int, ...], Fraction] = {}
    for a in _composition_exponents(d, n):
        weight = Fraction(1)
        for q in a:
            weight /= factorial(q)
        total = Fraction(0)
        for exp, c in rep.terms.items():
            shifted = tuple(x + y for x, y in zip(exp, a))
            total += c * _monomial_integral(n, shifted)
        if total != 0:
            out_terms[a] = weight * total
    return ExactPolynomial(LAMBDA, n, out_terms)


def conjugate_by_longest(v: Permutation) -> Permutation:
    """``w0 * v * w0``: the diagram automorphism sending ``s_i`` to ``s_{n-i}``."""
    w0 = longest_element(v.n)
    return compose(w0, compose(v, w0))
