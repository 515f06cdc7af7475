"""Multioperations on small finite universes.

Thin Python layer over the C++ core: composition, fixed-arity multiclone
closure, five-type classification and the Boolean-group projection property.
"""

from multiclone._core import (
    BooleanGroup,
    MultiOp,
    TheoremFalsified,
    UnsaturatedError,
    chi_triple,
    classify_five_type,
    close_fixed_arity,
    compose,
    emit_opfile,
    enumerate_boolean_groups,
    fg_generators,
    fg_membership,
    identify,
    is_idempotent,
    is_majority,
    is_maltsev,
    is_minority,
    is_pixley,
    is_projection,
    is_semiprojection,
    is_totally_symmetric,
    isomer,
    make_constant,
    make_empty,
    make_projection,
    parse_opfile,
    theorem2_equivalence,
)

__all__ = [
    "BooleanGroup",
    "MultiOp",
    "TheoremFalsified",
    "UnsaturatedError",
    "chi_triple",
    "classify_five_type",
    "close_fixed_arity",
    "compose",
    "emit_opfile",
    "enumerate_boolean_groups",
    "fg_generators",
    "fg_membership",
    "identify",
    "is_idempotent",
    "is_majority",
    "is_maltsev",
    "is_minority",
    "is_pixley",
    "is_projection",
    "is_semiprojection",
    "is_totally_symmetric",
    "isomer",
    "make_constant",
    "make_empty",
    "make_projection",
    "parse_opfile",
    "theorem2_equivalence",
]
