"""Small exact linear-algebra kernel: sparse integer matrices and a sparse
row-echelon form over Fraction.

Vectors are dicts {index: coefficient}; absent keys are zero.  All
arithmetic is exact (int / Fraction), which the rest of the package relies
on for certified verdicts.
"""

from __future__ import annotations

from fractions import Fraction


def vec_add(a: dict, b: dict, scale=1) -> dict:
    """a + scale*b, dropping zeros."""
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + scale * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vec_scale(a: dict, scale) -> dict:
    if scale == 0:
        return {}
    return {k: scale * v for k, v in a.items()}


class SparseMat:
    """Sparse matrix with exact entries, stored as {(row, col): value}."""

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    self.entries[(r, c)] = v

    def is_zero(self) -> bool:
        return not self.entries

    def add_to(self, r: int, c: int, v) -> None:
        w = self.entries.get((r, c), 0) + v
        if w:
            self.entries[(r, c)] = w
        else:
            self.entries.pop((r, c), None)

    def column(self, c: int) -> dict:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def matvec(self, vec: dict) -> dict:
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                w = out.get(r, 0) + v * x
                if w:
                    out[r] = w
                else:
                    out.pop(r, None)
        return out

    def __add__(self, other: "SparseMat") -> "SparseMat":
        out = SparseMat(self.nrows, self.ncols, self.entries)
        for rc, v in other.entries.items():
            out.add_to(*rc, v)
        return out

    def scaled(self, s) -> "SparseMat":
        return SparseMat(self.nrows, self.ncols,
                         {rc: s * v for rc, v in self.entries.items()})

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = SparseMat(self.nrows, other.ncols)
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out.add_to(r, c, v * w)
        return out

    def commutator(self, other: "SparseMat") -> "SparseMat":
        return (self @ other) + (other @ self).scaled(-1)

    def transpose(self) -> "SparseMat":
        return SparseMat(self.ncols, self.nrows,
                         {(c, r): v for (r, c), v in self.entries.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMat)
                and self.nrows == other.nrows
                and self.ncols == other.ncols
                and self.entries == other.entries)

    __hash__ = None

    def to_dense(self) -> list:
        m = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def __repr__(self):
        return f"SparseMat({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


class RowEchelon:
    """Incremental sparse row-echelon basis over Fraction.

    Rows are kept pivot-normalized (leading coefficient 1) and indexed by
    pivot key.  Keys may be any sortable hashable values.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> normalized row dict

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict) -> dict:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            vec = vec_add(vec, row, -vec[piv])
        return vec

    def add(self, vec: dict) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        red = self._reduce(vec)
        if not red:
            return False
        piv = min(red)
        self.rows[piv] = vec_scale(red, Fraction(1) / red[piv])
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec)
