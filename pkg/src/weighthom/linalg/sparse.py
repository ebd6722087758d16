"""Column-major sparse matrices over R = F[[pi]]."""

from __future__ import annotations

from typing import Sequence

from ..errors import FieldMismatchError
from ..ring import LocalElement
from ..ring.field import Field
from ..ring.text import render


class SparseMatrix:
    """Matrix with labelled row/column bases and LocalElement entries.

    ``cols[j]`` maps row index -> nonzero entry. Labels are arbitrary
    hashables (usually simplices); they only matter for reporting.
    """

    __slots__ = ("field", "rows", "col_labels", "cols")

    def __init__(self, field: Field, rows: Sequence, col_labels: Sequence, cols=None):
        self.field = field
        self.rows = tuple(rows)
        self.col_labels = tuple(col_labels)
        if cols is None:
            cols = [{} for _ in self.col_labels]
        else:
            cols = [{i: x for i, x in c.items() if not x.is_zero()} for c in cols]
        if len(cols) != len(self.col_labels):
            raise ValueError("column count does not match column labels")
        nr = len(self.rows)
        for c in cols:
            for i, x in c.items():
                if not 0 <= i < nr:
                    raise IndexError(f"row index {i} out of range")
                if x.field != field:
                    raise FieldMismatchError("entry field differs from matrix field")
        self.cols = cols

    # construction -------------------------------------------------------------

    @classmethod
    def from_dense(cls, field: Field, rows, rows_labels=None, col_labels=None):
        """``rows`` is a list of lists of LocalElement / int / str."""
        from ..ring.text import parse

        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        cols = [{} for _ in range(nc)]
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged matrix")
            for j, x in enumerate(row):
                if isinstance(x, str):
                    x = parse(x, field)
                elif isinstance(x, int):
                    x = LocalElement.constant(field, x)
                if not x.is_zero():
                    cols[j][i] = x
        return cls(field, rows_labels if rows_labels is not None else range(nr),
                   col_labels if col_labels is not None else range(nc), cols)

    @classmethod
    def identity(cls, field: Field, labels):
        labels = tuple(labels)
        one = LocalElement.one(field)
        return cls(field, labels, labels, [{j: one} for j in range(len(labels))])

    @classmethod
    def diagonal(cls, field: Field, labels, entries):
        labels = tuple(labels)
        return cls(field, labels, labels, [{j: x} for j, x in enumerate(entries)])

    @classmethod
    def zeros(cls, field: Field, rows, col_labels):
        return cls(field, rows, col_labels)

    # queries ------------------------------------------------------------------

    @property
    def shape(self):
        return len(self.rows), len(self.col_labels)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.col_labels)

    def get(self, i: int, j: int) -> LocalElement:
        x = self.cols[j].get(i)
        return x if x is not None else LocalElement.zero(self.field)

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def is_zero(self):
        return all(not c for c in self.cols)

    def column(self, j):
        return dict(self.cols[j])

    def to_dense(self):
        z = LocalElement.zero(self.field)
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.cols == other.cols)

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # algebra ------------------------------------------------------------------

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for c in other.cols:
            acc: dict = {}
            for k, y in c.items():
                for i, x in self.cols[k].items():
                    prev = acc.get(i)
                    t = x * y
                    acc[i] = t if prev is None else prev + t
            out.append(acc)
        return SparseMatrix(self.field, self.rows, other.col_labels, out)

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {col index: entry}."""
        acc: dict = {}
        for k, y in vec.items():
            for i, x in self.cols[k].items():
                prev = acc.get(i)
                t = x * y
                acc[i] = t if prev is None else prev + t
        return {i: x for i, x in acc.items() if not x.is_zero()}

    def transpose(self) -> "SparseMatrix":
        cols = [{} for _ in self.rows]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                cols[i][j] = x
        return SparseMatrix(self.field, self.col_labels, self.rows, cols)

    def select_columns(self, idx) -> "SparseMatrix":
        idx = list(idx)
        return SparseMatrix(self.field, self.rows, [self.col_labels[j] for j in idx],
                            [self.cols[j] for j in idx])

    def select_rows(self, idx) -> "SparseMatrix":
        idx = list(idx)
        pos = {i: k for k, i in enumerate(idx)}
        cols = [{pos[i]: x for i, x in c.items() if i in pos} for c in self.cols]
        return SparseMatrix(self.field, [self.rows[i] for i in idx], self.col_labels, cols)

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return SparseMatrix(self.field, self.rows, self.col_labels + other.col_labels,
                            self.cols + other.cols)

    # debug dump -----------------------------------------------------------------

    def dump(self, label=str) -> str:
        """One line per nonzero: ``row-label col-label coefficient``."""
        lines = []
        for j, c in enumerate(self.cols):
            for i in sorted(c):
                lines.append(f"{label(self.rows[i])} {label(self.col_labels[j])} "
                             f"{render(c[i]).replace(' ', '')}")
        return "\n".join(lines)
