"""Three independent routes to the volume polynomial of ``Hess(S, h)``.

1. *faces*: decompose the class into reduced Kogan / dual-Kogan face pairs
   and add up exact face volumes (tableau counts);
2. *derivative*: hit the closed-form volume of the whole polytope with one
   difference operator ``d_j - d_i`` per uncolored box of ``h``;
3. *schubert*: expand the class in the Schubert basis and evaluate the
   volume polynomial of the expansion through the flag integral.

All three agree exactly for every Hessenberg function (a standing acceptance
check at n <= 5), which is the point of keeping them separate.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .faces import FaceDiagram, intersect
from .kogan import reduced_dual_kogan_faces, reduced_kogan_faces
from .perms import (
    HessenbergFunction,
    Permutation,
    all_permutations,
    compose,
    hessenberg_permutation,
    longest_element,
)
from .poly import ALPHA, ExactPolynomial
from .schubert import (
    SchubertExpansion,
    conjugate_by_longest,
    expand_in_schubert_basis,
    schubert_polynomial,
    vol_lambda_of_class,
)
from .tableaux import face_volume


@dataclass(frozen=True)
class ClassPair:
    """A factor pair (u, v) with ``v^{-1} u = w_h`` and additive lengths."""

    u: Permutation
    v: Permutation


def length_additive_pairs(h: HessenbergFunction) -> list[ClassPair]:
    """All pairs (u, v = u * w_h^{-1}) with ``len(u) + len(v) = len(w_h)``,
    sorted by (len(u), u)."""
    wh = hessenberg_permutation(h)
    wh_inv = wh.inverse()
    target = wh.length()
    pairs = []
    for u in all_permutations(h.n):
        v = compose(u, wh_inv)
        if u.length() + v.length() == target:
            pairs.append(ClassPair(u, v))
    pairs.sort(key=lambda p: (p.u.length(), p.u.word))
    return pairs


def hess_face_decomposition(h: HessenbergFunction) -> list[FaceDiagram]:
    """The multiset of face intersections ``F meet F*`` over all factor pairs
    and all reduced Kogan / dual-Kogan faces with the matching words.  Empty
    intersections are kept (they carry zero volume)."""
    n = h.n
    out = []
    for pair in length_additive_pairs(h):
        for f in reduced_kogan_faces(n, pair.u):
            for g in reduced_dual_kogan_faces(n, pair.v):
                out.append((pair.u.length(), pair.u.word, intersect(f, g)))
    out.sort(key=lambda t: (t[0], t[1], t[2].edge_key()))
    return [f for _, _, f in out]


def hess_volume_faces(h: HessenbergFunction) -> ExactPolynomial:
    """Face route: sum of face volumes over the decomposition.

    What contributes is (m - d)-dimensional volume, m the ambient dimension
    and d the codimension of the class, so intersections that come out empty
    or smaller than m - d count as zero.
    """
    target_dim = h.dimension()
    total = poly.zero(ALPHA, h.n)
    for f in hess_face_decomposition(h):
        if not f.is_empty and f.dimension == target_dim:
            total = total + face_volume(f)
    return total


def hess_volume_derivative(h: HessenbergFunction) -> ExactPolynomial:
    """Derivative route: one operator factor per uncolored box of ``h``."""
    from .tableaux import gz_volume_closed_form

    vol = gz_volume_closed_form(h.n)
    pairs = [(j, i) for i, j in h.uncolored_boxes()]
    return poly.to_alpha_basis(poly.apply_operator_product(vol, pairs))


def hess_class_representative(h: HessenbergFunction):
    """Chern-basis polynomial of the class: sum over factor pairs of
    ``S_u * S_{w0 v w0}``."""
    total = poly.zero(poly.CHERN, h.n)
    for pair in length_additive_pairs(h):
        product = schubert_polynomial(pair.u) * schubert_polynomial(conjugate_by_longest(pair.v))
        total = total + product
    return total


def hess_class_schubert(h: HessenbergFunction) -> SchubertExpansion:
    """The class of ``Hess(S, h)`` expanded in the Schubert basis of S_n."""
    return expand_in_schubert_basis(hess_class_representative(h))


def hess_volume_schubert(h: HessenbergFunction) -> ExactPolynomial:
    """Schubert route: volume polynomial of the class expansion, in the
    alpha basis."""
    vol = vol_lambda_of_class(hess_class_schubert(h), h.n)
    return poly.to_alpha_basis(vol)


@dataclass(frozen=True)
class PositivityReport:
    """Coefficients ``a_w`` of the class over the dimension-indexed Schubert
    basis: ``[Hess] = sum a_w [X^{w0 w}]`` with ``len(w) = dim Hess``."""

    h: HessenbergFunction
    coefficients: dict[Permutation, Fraction]
    min_coefficient: Fraction
    all_strictly_positive: bool

    def sorted_coefficients(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self.coefficients.items(), key=lambda t: t[0].word)


def positivity_report(h: HessenbergFunction) -> PositivityReport:
    """Tabulate every ``a_w`` with ``len(w) = dim Hess(S, h)`` and flag
    whether all of them are >= 1."""
    expansion = hess_class_schubert(h)
    w0 = longest_element(h.n)
    dim = h.dimension()
    coeffs = {}
    for w in all_permutations(h.n):
        if w.length() == dim:
            coeffs[w] = expansion.coefficient(compose(w0, w))
    lo = min(coeffs.values())
    return PositivityReport(h, coeffs, lo, lo >= 1)
