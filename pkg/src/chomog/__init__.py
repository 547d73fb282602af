"""Connected-homogeneous digraphs: constructions, checkers and a small census."""

from .census import census, enumerate_c_homogeneous, recognize
from .digraph import Digraph, VertexPartition, empty, induced, lex_product
from .errors import ChomogError
from .families import CatalogEntry, build_catalog, cp, directed_cycle, h, t2_ball, y
from .homogeneity import (
    HomogeneityVerdict,
    brute_force_oracle,
    is_c_homogeneous,
    is_c_homogeneous_bipartite,
    is_homogeneous,
)
from .quotients import (
    QuotientSpec,
    TriangleSystem,
    covering_check,
    quotient_digraph,
    search_quotients,
    verify_quotient,
)
from .reachability import delta_shape, is_1_arc_transitive, reachability_classes
from .symmetry import automorphism_group, canonical_form, certificate, extend_partial

__all__ = [
    "CatalogEntry",
    "ChomogError",
    "Digraph",
    "HomogeneityVerdict",
    "QuotientSpec",
    "TriangleSystem",
    "VertexPartition",
    "automorphism_group",
    "brute_force_oracle",
    "build_catalog",
    "canonical_form",
    "census",
    "certificate",
    "covering_check",
    "cp",
    "delta_shape",
    "directed_cycle",
    "empty",
    "enumerate_c_homogeneous",
    "extend_partial",
    "h",
    "induced",
    "is_1_arc_transitive",
    "is_c_homogeneous",
    "is_c_homogeneous_bipartite",
    "is_homogeneous",
    "lex_product",
    "quotient_digraph",
    "reachability_classes",
    "recognize",
    "search_quotients",
    "t2_ball",
    "verify_quotient",
    "y",
]
