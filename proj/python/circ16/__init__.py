"""Exact arithmetic for order-16 integer circulant determinants."""

from ._circ16 import (
    base128,
    build_witness_vector,
    classify,
    convolve,
    det,
    det_via_norms,
    find_value,
    norms,
    selftest,
    spectrum,
    witness,
)

__all__ = [
    "base128",
    "build_witness_vector",
    "classify",
    "convolve",
    "det",
    "det_via_norms",
    "find_value",
    "norms",
    "selftest",
    "spectrum",
    "witness",
]
