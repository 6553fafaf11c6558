"""Exact and modular sparse linear algebra used by the ideal calculus."""

from .certify import (
    PRIMES,
    CertificationError,
    CertifiedDims,
    certified_filtered_dims,
    certified_graded_dims,
    crt,
    rational_reconstruct,
)
from .echelon import SparseEchelon
from .engines import HAVE_KERNEL, PyEngine, exact_engine, gf_engine
from .field import HAVE_GMPY2, QQ, GFp
from .span import FilteredSpan, GradedSpan, filtered_span, graded_span

__all__ = [
    "PRIMES",
    "CertificationError",
    "CertifiedDims",
    "certified_filtered_dims",
    "certified_graded_dims",
    "crt",
    "rational_reconstruct",
    "SparseEchelon",
    "HAVE_KERNEL",
    "PyEngine",
    "exact_engine",
    "gf_engine",
    "HAVE_GMPY2",
    "QQ",
    "GFp",
    "FilteredSpan",
    "GradedSpan",
    "filtered_span",
    "graded_span",
]
