"""Exact Ext computations for Frobenius-twisted strict polynomial functors."""

from ._frobext import (
    __version__,
    a_space,
    character,
    character_table,
    conjugate,
    evaluate_ext,
    ext_divided,
    ext_fk,
    ext_weyl_fk,
    ext_weyl_schur,
    f_k,
    from_core_quotient,
    kan_normalize,
    lr_coefficients,
    p_core_quotient,
    partitions_of,
    s_space,
    specht_dim,
)

__all__ = [
    "__version__",
    "a_space",
    "character",
    "character_table",
    "conjugate",
    "evaluate_ext",
    "ext_divided",
    "ext_fk",
    "ext_weyl_fk",
    "ext_weyl_schur",
    "f_k",
    "from_core_quotient",
    "kan_normalize",
    "lr_coefficients",
    "p_core_quotient",
    "partitions_of",
    "s_space",
    "specht_dim",
]
