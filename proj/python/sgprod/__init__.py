"""Signed graph products, switching and balancing dimension."""

from ._core import (
    CapExceeded,
    SignedGraph,
    apply_k_switching,
    apply_switching,
    bcd_lex,
    bdim,
    bdim_oracle,
    cartesian,
    claim_ids,
    components,
    cycle_sign,
    export_dot,
    generate,
    hg_lex,
    inner_sign,
    is_antibalanced,
    is_balanced,
    is_k_positive,
    is_switching_equivalent,
    negate,
    parse_graph,
    product,
    run_claims,
    serialize_graph,
    strong,
    table_product,
    table_witness,
    tensor,
)

__all__ = [
    "CapExceeded",
    "SignedGraph",
    "apply_k_switching",
    "apply_switching",
    "bcd_lex",
    "bdim",
    "bdim_oracle",
    "cartesian",
    "claim_ids",
    "components",
    "cycle_sign",
    "export_dot",
    "generate",
    "hg_lex",
    "inner_sign",
    "is_antibalanced",
    "is_balanced",
    "is_k_positive",
    "is_switching_equivalent",
    "negate",
    "parse_graph",
    "product",
    "run_claims",
    "serialize_graph",
    "strong",
    "table_product",
    "table_witness",
    "tensor",
]
