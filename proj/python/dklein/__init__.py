"""Exact symbolic computation in the deformed type-D Kleinian algebras.

Thin re-export of the compiled extension; everything speaks the text grammar
(polynomials in t, scalars a+b*i, words in u, v, w).
"""

from ._dklein import (
    Algebra,
    Error,
    InvariantViolation,
    ParseError,
    PreconditionError,
    aut,
    center,
    derive_p,
    derive_q,
    iso_d,
    iso_h,
    moduli,
    orbit,
    run,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Error",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "aut",
    "center",
    "derive_p",
    "derive_q",
    "iso_d",
    "iso_h",
    "moduli",
    "orbit",
    "run",
    "verify",
]
