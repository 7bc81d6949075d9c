"""Exact volume polynomials and Schubert-class decompositions of regular
semisimple Hessenberg varieties, through Gelfand-Zetlin polytope
combinatorics.  All core arithmetic is exact rational."""

from .faces import (
    FaceDiagram,
    build_face,
    cube_face,
    cube_indices,
    full_polytope,
    intersect,
    parse_face_spec,
    simple_vertex,
)
from .lattice import ehrhart_volume_oracle, perm_volume_oracle
from .perms import (
    HessenbergFunction,
    Permutation,
    all_hessenberg_functions,
    bruhat_leq,
    compose,
    hessenberg_permutation,
    longest_element,
    toric_hessenberg_function,
)
from .pipeline import (
    hess_class_schubert,
    hess_face_decomposition,
    hess_volume_derivative,
    hess_volume_faces,
    hess_volume_schubert,
    length_additive_pairs,
    positivity_report,
)
from .poly import ExactPolynomial, evaluate, to_alpha_basis
from .permutohedron import (
    GZPoint,
    bruhat_extremes,
    project_to_decomposition,
    redistribute,
    richardson_decomposition_check,
    verify_cube,
)
from .schubert import (
    SchubertExpansion,
    expand_in_schubert_basis,
    monk_multiply,
    schubert_polynomial,
    vol_lambda_of_class,
)
from .tableaux import (
    enumerate_tableaux,
    face_volume,
    gz_volume_closed_form,
    neighbor_volume_relation,
)

__version__ = "0.1.0"

__all__ = [
    "ExactPolynomial",
    "FaceDiagram",
    "GZPoint",
    "HessenbergFunction",
    "Permutation",
    "SchubertExpansion",
    "all_hessenberg_functions",
    "bruhat_extremes",
    "bruhat_leq",
    "build_face",
    "compose",
    "cube_face",
    "cube_indices",
    "ehrhart_volume_oracle",
    "enumerate_tableaux",
    "evaluate",
    "expand_in_schubert_basis",
    "face_volume",
    "full_polytope",
    "gz_volume_closed_form",
    "hess_class_schubert",
    "hess_face_decomposition",
    "hess_volume_derivative",
    "hess_volume_faces",
    "hess_volume_schubert",
    "hessenberg_permutation",
    "intersect",
    "length_additive_pairs",
    "longest_element",
    "monk_multiply",
    "neighbor_volume_relation",
    "parse_face_spec",
    "perm_volume_oracle",
    "positivity_report",
    "project_to_decomposition",
    "redistribute",
    "richardson_decomposition_check",
    "schubert_polynomial",
    "simple_vertex",
    "to_alpha_basis",
    "toric_hessenberg_function",
    "verify_cube",
    "vol_lambda_of_class",
]
