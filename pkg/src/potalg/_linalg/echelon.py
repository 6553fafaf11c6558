"""Sparse row echelon over an arbitrary exact field.

Rows are dicts column -> nonzero field element.  Columns are processed
from the highest index downward, so the pivot of a row is its largest
column.  Incoming rows are fully reduced against all existing pivot rows
at insertion time; stored rows are never modified afterwards, which keeps
every recorded intermediate rank meaningful (each stored row is an exact
element of the span at its insertion step).

Row reduction is deterministic: first-nonzero pivoting on the fixed
column order, rows kept monic.
"""

from __future__ import annotations

import heapq

__all__ = ["SparseEchelon"]


class SparseEchelon:
    def __init__(self, ncols: int, field):
        self.ncols = ncols
        self.field = field
        self.pivot_rows = {}  # pivot col -> monic row dict
        self.insertion_order = []  # pivot cols in insertion order

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def pivot_cols(self):
        return set(self.pivot_rows)

    def row(self, pivot: int) -> dict:
        return self.pivot_rows[pivot]

    def _walk(self, vec, record_pivot: bool):
        """Eliminate every pivot column of `vec`, walking columns downward.

        Returns (pivot, work) where pivot is the leading non-pivot column
        (-1 if the row reduced to zero or record_pivot is False).
        """
        field = self.field
        work = {}
        heap = []
        for col, val in vec.items():
            if val:
                work[col] = val
                heap.append(-col)
        heapq.heapify(heap)
        pivot = -1
        while heap:
            col = -heapq.heappop(heap)
            val = work.get(col)
            if not val:
                continue
            row = self.pivot_rows.get(col)
            if row is None:
                if record_pivot and pivot < 0:
                    pivot = col
                continue
            del work[col]
            for rcol, rval in row.items():
                if rcol == col:
                    continue
                cur = work.get(rcol)
                if cur is None:
                    new = field.neg(field.mul(val, rval))
                    if new:
                        work[rcol] = new
                        heapq.heappush(heap, -rcol)
                else:
                    new = field.sub_mul(cur, val, rval)
                    if new:
                        work[rcol] = new
                    else:
                        del work[rcol]
        return pivot, work

    def add_row(self, vec: dict):
        """Insert a row; returns (pivot, monic reduced row) or None if dependent."""
        pivot, work = self._walk(vec, record_pivot=True)
        if pivot < 0:
            return None
        field = self.field
        inv = field.inv(work[pivot])
        row = {col: field.mul(val, inv) for col, val in work.items()}
        self.pivot_rows[pivot] = row
        self.insertion_order.append(pivot)
        return pivot, row

    def reduce(self, vec: dict) -> dict:
        """Normal form of `vec` modulo the current row space (no insertion)."""
        _, work = self._walk(vec, record_pivot=False)
        return work

    def back_substitute(self) -> None:
        """Rewrite stored rows so tails contain no pivot columns (RREF).

        Only safe once no further intermediate ranks will be read; the row
        space is unchanged.
        """
        for pivot in sorted(self.pivot_rows, reverse=True):
            row = self.pivot_rows[pivot]
            if all(col == pivot or col not in self.pivot_rows for col in row):
                continue
            vec = {col: val for col, val in row.items() if col != pivot}
            _, work = self._walk(vec, record_pivot=False)
            work[pivot] = self.field.coerce(1)
            self.pivot_rows[pivot] = work
