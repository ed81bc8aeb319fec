"""Decision procedure and worm calculus for closed GLP formulas."""

from ._core import (
    GlpError,
    bcw,
    check_model,
    countermodel,
    decide,
    is_consistent,
    is_wnf,
    nf,
    normalize,
    reduction_target,
    wnf,
    worm_compare,
    worm_conj,
    worm_entails,
    zero_diamond_worm,
)

__all__ = [
    "GlpError",
    "bcw",
    "check_model",
    "countermodel",
    "decide",
    "is_consistent",
    "is_wnf",
    "nf",
    "normalize",
    "reduction_target",
    "wnf",
    "worm_compare",
    "worm_conj",
    "worm_entails",
    "zero_diamond_worm",
]
