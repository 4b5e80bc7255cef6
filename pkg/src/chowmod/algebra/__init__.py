"""Coefficient fields, polynomials, factorization and places of the projective line."""
from .fields import (
    QQ,
    ExtensionField,
    Field,
    FieldMismatch,
    GF,
    PrimeField,
    RationalFunctionField,
    Rationals,
    field_extend,
    norm,
    parse_field,
    standard_extension,
    trace,
)
from .poly import Poly, RatFunc, parse_poly, parse_ratfunc, resultant
from .factor import FactorizationIncomplete, factor, is_irreducible, roots

__all__ = [
    "QQ",
    "ExtensionField",
    "Field",
    "FieldMismatch",
    "GF",
    "PrimeField",
    "RationalFunctionField",
    "Rationals",
    "field_extend",
    "norm",
    "parse_field",
    "standard_extension",
    "trace",
    "Poly",
    "RatFunc",
    "parse_poly",
    "parse_ratfunc",
    "resultant",
    "FactorizationIncomplete",
    "factor",
    "is_irreducible",
    "roots",
]
