"""Exact arithmetic: Q, the field K = Q(a), finite fields, quadratic extensions."""

from .finitefield import (
    GF,
    FFElement,
    FiniteField,
    extension_field,
    factor_mod_p,
    field_from_factor,
    is_irreducible,
    reduce_poly_mod_p,
    verify_irreducible,
)
from .numberfield import (
    K,
    NFElement,
    NumberField,
    a,
    nf_inv,
    nf_sqrt,
    residue_reduce,
    working_precision,
)
from .quadext import QuadExtElement, QuadraticExtension
from .rational import QQ, RationalField, squarefree_decomposition, squarefree_part


def sqrt_in_field(s, field, precision=None):
    """Square root of s in ``field`` (Q, K or a finite field), or None."""
    if isinstance(field, NumberField):
        return nf_sqrt(field(s), precision)
    return field.sqrt(s)


__all__ = [
    "GF", "FFElement", "FiniteField", "extension_field", "factor_mod_p",
    "field_from_factor", "is_irreducible", "reduce_poly_mod_p", "verify_irreducible",
    "K", "NFElement", "NumberField", "a", "nf_inv", "nf_sqrt", "residue_reduce",
    "working_precision",
    "QuadExtElement", "QuadraticExtension", "QQ", "RationalField",
    "squarefree_decomposition", "squarefree_part", "sqrt_in_field",
]
