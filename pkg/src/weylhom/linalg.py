"""Exact rational linear algebra on sparse matrices and vectors.

Everything here works over ``fractions.Fraction``.  Elimination is done
fraction-free (Bareiss) on integer rows whenever possible: rational rows are
scaled to primitive integer rows first and divided back only at the very end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

SparseVec = Dict[int, Fraction]


def _clean(vec: Mapping[int, Fraction]) -> SparseVec:
    return {i: Fraction(c) for i, c in vec.items() if c != 0}


class SparseMatrix:
    """A rows x cols matrix stored as ``{row: {col: value}}`` with no zeros."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: Dict[int, SparseVec] = {}
        if entries:
            items = entries.items() if isinstance(entries, Mapping) else entries
            for (r, c), v in items:
                if v != 0:
                    self.rows.setdefault(r, {})[c] = Fraction(v)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> "SparseMatrix":
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        return cls(nrows, ncols, {(r, c): v for r, row in enumerate(dense) for c, v in enumerate(row)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def items(self) -> Iterable[Tuple[Tuple[int, int], Fraction]]:
        for r, row in self.rows.items():
            for c, v in row.items():
                yield (r, c), v

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def get(self, r: int, c: int) -> Fraction:
        return self.rows.get(r, {}).get(c, Fraction(0))

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.items():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self.rows

    def is_diagonal(self) -> bool:
        return all(c == r for r, row in self.rows.items() for c in row)

    def diagonal(self) -> List[Fraction]:
        return [self.get(i, i) for i in range(min(self.nrows, self.ncols))]

    def _check_same_shape(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        out = self.copy()
        for (r, c), v in other.items():
            row = out.rows.setdefault(r, {})
            s = row.get(c, 0) + v
            if s:
                row[c] = s
            else:
                row.pop(c, None)
                if not row:
                    del out.rows[r]
        return out

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, s) -> "SparseMatrix":
        s = Fraction(s)
        out = SparseMatrix(self.nrows, self.ncols)
        if s:
            out.rows = {r: {c: v * s for c, v in row.items()} for r, row in self.rows.items()}
        return out

    def __rmul__(self, s) -> "SparseMatrix":
        return self.scale(s)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = SparseMatrix(self.nrows, other.ncols)
        for r, row in self.rows.items():
            acc: SparseVec = {}
            for k, v in row.items():
                for c, w in other.rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            acc = {c: x for c, x in acc.items() if x}
            if acc:
                out.rows[r] = acc
        return out

    def apply(self, vec: Mapping[int, Fraction]) -> SparseVec:
        """Matrix times a sparse column vector."""
        out: SparseVec = {}
        for r, row in self.rows.items():
            s = sum((v * vec[c] for c, v in row.items() if c in vec), Fraction(0))
            if s:
                out[r] = s
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.items()})

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        out = SparseMatrix(self.nrows * other.nrows, self.ncols * other.ncols)
        for (r1, c1), v1 in self.items():
            for (r2, c2), v2 in other.items():
                out.rows.setdefault(r1 * other.nrows + r2, {})[c1 * other.ncols + c2] = v1 * v2
        return out

    def copy(self) -> "SparseMatrix":
        out = SparseMatrix(self.nrows, self.ncols)
        out.rows = {r: dict(row) for r, row in self.rows.items()}
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SparseMatrix":
        rpos = {r: i for i, r in enumerate(row_idx)}
        cpos = {c: j for j, c in enumerate(col_idx)}
        out = SparseMatrix(len(row_idx), len(col_idx))
        for r, row in self.rows.items():
            if r not in rpos:
                continue
            picked = {cpos[c]: v for c, v in row.items() if c in cpos}
            if picked:
                out.rows[rpos[r]] = picked
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def _primitive_int_row(vec: Mapping[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row (same span)."""
    if not vec:
        return {}
    den = lcm(*(Fraction(v).denominator for v in vec.values()))
    ints = {c: int(Fraction(v) * den) for c, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()}


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def echelon(rows: Iterable[Mapping[int, Fraction]]) -> List[Dict[int, int]]:
    """Fraction-free row echelon form of a list of sparse rational rows.

    Rows are returned as primitive integer rows with strictly increasing
    pivot (leading) columns.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        row = _primitive_int_row(raw)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            a, b = piv[lead], row[lead]
            new: Dict[int, int] = {}
            for c in set(row) | set(piv):
                v = a * row.get(c, 0) - b * piv.get(c, 0)
                if v:
                    new[c] = v
            row = _primitive_int_row(new)
    return [pivots[c] for c in sorted(pivots)]


def rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    return len(echelon(rows))


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> List[SparseVec]:
    """Basis of ``{x in Q^ncols : row . x = 0 for every row}``.

    Basis vectors are normalized to have a 1 at their free column.
    """
    ech = echelon(rows)
    pivot_cols = [min(r) for r in ech]
    pivot_set = set(pivot_cols)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: List[SparseVec] = []
    for f in free:
        x: SparseVec = {f: Fraction(1)}
        for row, p in zip(reversed(ech), reversed(pivot_cols)):
            s = sum((Fraction(v) * x[c] for c, v in row.items() if c != p and c in x), Fraction(0))
            if s:
                x[p] = -s / row[p]
        basis.append(x)
    return basis


class EchelonBasis:
    """Incrementally maintained reduced basis of a subspace of Q^n."""

    def __init__(self):
        self._rows: Dict[int, SparseVec] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[int, Fraction]) -> SparseVec:
        v = _clean(vec)
        while v:
            hit = [c for c in v if c in self._rows]
            if not hit:
                break
            c = min(hit)
            coef = v[c]
            for k, x in self._rows[c].items():
                nv = v.get(k, 0) - coef * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        inv = 1 / v[lead]
        v = {c: x * inv for c, x in v.items()}
        # keep previous rows reduced against the new pivot
        for p, row in self._rows.items():
            if lead in row:
                coef = row[lead]
                for k, x in v.items():
                    nv = row.get(k, 0) - coef * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self._rows[lead] = v
        return True

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def vectors(self) -> List[SparseVec]:
        return [dict(self._rows[c]) for c in sorted(self._rows)]
