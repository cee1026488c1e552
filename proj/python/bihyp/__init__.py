"""Colorability of mixed and bi-hypergraphs: solver, constructions, bounds."""

from ._core import (
    MixedHypergraph,
    are_isomorphic,
    bounds,
    canonical_form,
    decide_colorable,
    enumerate_proper_colorings,
    from_json,
    is_minimal_uncolorable,
    is_proper,
    make_fano,
    make_hk,
    make_knlm,
    make_muc,
    to_json,
    upper_chromatic_number,
    __version__,
)

__all__ = [
    "MixedHypergraph",
    "are_isomorphic",
    "bounds",
    "canonical_form",
    "decide_colorable",
    "enumerate_proper_colorings",
    "from_json",
    "is_minimal_uncolorable",
    "is_proper",
    "make_fano",
    "make_hk",
    "make_knlm",
    "make_muc",
    "to_json",
    "upper_chromatic_number",
    "__version__",
]
