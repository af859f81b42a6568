"""Construction and spectral analysis of resilient Boolean functions."""

from rbfc._core import (
    RbfcError,
    TruthTable,
    anf_string,
    concatenate,
    construct,
    degree,
    fast_walsh,
    mm_bent,
    naive_walsh,
    nonlinearity,
    profile,
    resiliency,
    table_bound,
)

__all__ = [
    "RbfcError",
    "TruthTable",
    "anf_string",
    "concatenate",
    "construct",
    "degree",
    "fast_walsh",
    "mm_bent",
    "naive_walsh",
    "nonlinearity",
    "profile",
    "resiliency",
    "table_bound",
]
