"""cat_G bounds, covers, FCA checks and vanishing certificates."""

from ._core import (
    FactStore,
    GroupClass,
    MalformedInput,
    SimplicialComplex,
    SimplicialMap,
    UnsupportedInput,
    VertexCover,
    abelianization,
    cat_lower,
    cat_upper,
    check_fca,
    classify_group,
    combine_product,
    corpus,
    coset_index,
    finite_cover_rate,
    mapping_torus,
    nerve,
    pi1,
    product,
    run,
    stars_cover,
    subdivide,
    validate_cover,
    wedge,
)

__all__ = [n for n in dir() if not n.startswith("_")]
