"""Echelon engine selection: compiled kernel when built, else pure Python.

Both engines expose the same interface and produce identical results; the
compiled one is just fast.  `exact_engine` always runs in Python over
exact rationals.
"""

from __future__ import annotations

from .echelon import SparseEchelon
from .field import QQ, GFp

try:
    from ._modkernel import GFpEchelonKernel

    HAVE_KERNEL = True
except ImportError:  # extension not built
    GFpEchelonKernel = None
    HAVE_KERNEL = False

__all__ = ["PyEngine", "exact_engine", "gf_engine", "HAVE_KERNEL"]


class PyEngine:
    """Pure-Python engine with the kernel's row-batch API."""

    def __init__(self, ncols: int, field):
        self.ncols = ncols
        self.field = field
        self._e = SparseEchelon(ncols, field)
        self._rows = []  # insertion-order reduced rows
        self._maps = []

    @property
    def rank(self):
        return self._e.rank

    @property
    def pivots(self):
        return self._e.insertion_order

    def has_pivot(self, col):
        return col in self._e.pivot_rows

    def pivot_cols(self):
        return set(self._e.pivot_rows)

    def row(self, pivot):
        return dict(self._e.pivot_rows[pivot])

    def add_row(self, vec):
        res = self._e.add_row(vec)
        if res is not None:
            self._rows.append(res[1])
        return res

    def register_colmap(self, mapping) -> int:
        self._maps.append(list(mapping))
        return len(self._maps) - 1

    def add_product_rows(self, src, map_id, start, end):
        mp = self._maps[map_id]
        src_rows = src._rows
        for ridx in range(start, end):
            self.add_row({mp[c]: v for c, v in src_rows[ridx].items()})

    def reduce(self, vec):
        return self._e.reduce(vec)

    def back_substitute(self):
        self._e.back_substitute()

    def export_rows(self):
        out = []
        for piv in self._e.insertion_order:
            row = self._e.pivot_rows[piv]
            cols = sorted(row)
            out.append((piv, cols, [row[c] for c in cols]))
        return out


def exact_engine(ncols: int):
    """(engine, field) over exact rationals."""
    return PyEngine(ncols, QQ), QQ


def gf_engine(ncols: int, p: int, force_python: bool = False):
    """(engine, field) over GF(p); compiled kernel when available."""
    field = GFp(p)
    if HAVE_KERNEL and not force_python:
        return GFpEchelonKernel(ncols, p), field
    return PyEngine(ncols, field), field
