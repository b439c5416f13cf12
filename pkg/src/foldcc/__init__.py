"""Foldable cubical complexes of nonpositive curvature.

Library for finite foldable cubical complexes: axiom validation, foldings
and edge colorings, color-restricted subcomplexes and hyperplane
decompositions, combinatorial link-distance predicates, closed rank-one
geodesic constructions, and the dimension-3 rank dichotomy.
"""

from .core import (
    CubicalComplex,
    SimplicialComplex,
    VertexLink,
    components,
    is_flag,
    link,
    load_complex,
    load_simplicial,
    serialize_complex,
    serialize_simplicial,
    simplicial_isomorphic,
    validate_fcc,
)
from .folding import (
    EdgeColoring,
    Folding,
    NotFoldable,
    ParallelClasses,
    coloring_from,
    find_folding,
    fold_simplicial,
    parallel_classes,
    serialize_folding,
    verify_folding,
)

__all__ = [
    "CubicalComplex", "SimplicialComplex", "VertexLink", "components",
    "is_flag", "link", "load_complex", "load_simplicial", "serialize_complex",
    "serialize_simplicial", "simplicial_isomorphic", "validate_fcc",
    "EdgeColoring", "Folding", "NotFoldable", "ParallelClasses",
    "coloring_from", "find_folding", "fold_simplicial", "parallel_classes",
    "serialize_folding", "verify_folding",
]

__version__ = "0.1.0"
