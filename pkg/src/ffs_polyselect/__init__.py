"""Polynomial selection metrics and ranking for the Function Field Sieve."""

from .gf import (
    FieldCtx,
    UPoly,
    make_field,
    gcd,
    pow_mod,
    is_irreducible,
    irreducibles_of_degree,
    irreducibles_stream,
    count_irreducibles,
    parse_upoly,
    render_upoly,
)

__version__ = "0.1.0"
