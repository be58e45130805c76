"""Exact linear algebra over any FieldSpec.

Matrices are sparse ``(row, col) -> Scalar`` maps. Elimination pivots on the
first nonzero entry in column order, so kernels come out the same every run.
Small matrices over Q go through fraction-free (Bareiss) elimination on
integers; everything else uses Gauss-Jordan over the field on sparse rows.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import DivisionByZero, FieldMismatch
from .scalar import FieldSpec, Scalar

DENSE_LIMIT = 64


class Matrix:
    __slots__ = ("nrows", "ncols", "entries", "field")

    def __init__(self, nrows: int, ncols: int, entries: dict, field: FieldSpec):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            v = field(v)
            if not v.is_zero():
                clean[r, c] = v
        self.entries = clean

    @classmethod
    def from_rows(cls, rows, field: FieldSpec) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls(len(rows), ncols, entries, field)

    @classmethod
    def from_columns(cls, cols, field: FieldSpec, nrows: int | None = None) -> "Matrix":
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        entries = {(i, j): v for j, col in enumerate(cols) for i, v in enumerate(col)}
        return cls(nrows, len(cols), entries, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls(n, n, {(i, i): field.one for i in range(n)}, field)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldSpec) -> "Matrix":
        return cls(nrows, ncols, {}, field)

    def __getitem__(self, rc) -> Scalar:
        return self.entries.get(rc, self.field.zero)

    def rows(self) -> list[list[Scalar]]:
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column(self, c: int) -> tuple:
        z = self.field.zero
        col = [z] * self.nrows
        for (r, cc), v in self.entries.items():
            if cc == c:
                col[r] = v
        return tuple(col)

    def columns(self) -> list[tuple]:
        z = self.field.zero
        cols = [[z] * self.nrows for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return [tuple(c) for c in cols]

    def _same_field(self, other):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"{self.field.label} vs {other.field.label}")

    def apply(self, vec) -> tuple:
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        z = self.field.zero
        out = [z] * self.nrows
        for (r, c), v in self.entries.items():
            x = vec[c]
            if x:
                out[r] = out[r] + v * x
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        by_row: dict[int, list] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc[key] + v * w if key in acc else v * w
        return Matrix(self.nrows, other.ncols, acc, self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc[k] + v if k in acc else v
        return Matrix(self.nrows, self.ncols, acc, self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, {k: -v for k, v in self.entries.items()}, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, s) -> "Matrix":
        s = self.field(s)
        return Matrix(self.nrows, self.ncols, {k: v * s for k, v in self.entries.items()}, self.field)

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}, self.field)

    def trace(self) -> Scalar:
        t = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            t = t + self[i, i]
        return t

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.nrows, self.field)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.field == other.field \
            and self.entries == other.entries

    __hash__ = None

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        cols = solve_columns(self, Matrix.identity(self.nrows, self.field).columns())
        if cols is None:
            raise DivisionByZero("matrix is singular")
        return Matrix.from_columns(cols, self.field, self.nrows)

    def power(self, k: int) -> "Matrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Matrix.identity(self.nrows, self.field)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows())
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.label}: [{body}])"


# -- elimination -------------------------------------------------------------

def _sparse_rows(M: Matrix, extra_cols=()) -> list[dict]:
    rows = [dict() for _ in range(M.nrows)]
    for (r, c), v in M.entries.items():
        rows[r][c] = v
    for j, col in enumerate(extra_cols):
        for r, v in enumerate(col):
            if not v.is_zero():
                rows[r][M.ncols + j] = v
    return rows


def _gauss_jordan(rows: list[dict], ncols: int, field: FieldSpec, stop: int | None = None):
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Pivots are only taken in columns < ``stop`` (augmented systems).
    """
    stop = ncols if stop is None else stop
    pivots = []
    r = 0
    for c in range(stop):
        piv = next((i for i in range(r, len(rows)) if c in rows[i]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[c].inv()
        if inv != 1:
            for k in prow:
                prow[k] = prow[k] * inv
        for i, row in enumerate(rows):
            if i == r or c not in row:
                continue
            f = row[c]
            for k, v in prow.items():
                nv = row[k] - f * v if k in row else -(f * v)
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _bareiss_echelon(mat: list[list[int]], stop: int):
    """Fraction-free forward elimination on an integer matrix, in place."""
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(stop):
        piv = next((i for i in range(r, nrows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        prow = mat[r]
        for i in range(r + 1, nrows):
            row = mat[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def _integer_rows(M: Matrix, extra_cols=()) -> list[list[int]]:
    width = M.ncols + len(extra_cols)
    rows = [[Fraction(0)] * width for _ in range(M.nrows)]
    for (r, c), v in M.entries.items():
        rows[r][c] = v.value
    for j, col in enumerate(extra_cols):
        for r, v in enumerate(col):
            rows[r][M.ncols + j] = v.value
    out = []
    for row in rows:
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def _use_bareiss(M: Matrix) -> bool:
    return M.field.kind == "Q" and M.nrows < DENSE_LIMIT and M.ncols < DENSE_LIMIT


def _reduce(M: Matrix, extra_cols=(), method: str | None = None):
    """RREF of [M | extra] as sparse rows over the field, pivots restricted to M's columns."""
    if method is None:
        method = "bareiss" if _use_bareiss(M) else "gauss"
    width = M.ncols + len(extra_cols)
    if method == "gauss":
        return _gauss_jordan(_sparse_rows(M, extra_cols), width, M.field, stop=M.ncols)
    if M.field.kind != "Q":
        raise ValueError("fraction-free path needs integer-convertible entries")
    if M.nrows == 0:
        return [], []
    ech, pivots = _bareiss_echelon(_integer_rows(M, extra_cols), M.ncols)
    # back-substitution over Q to reach reduced form
    field = M.field
    rows = []
    for row in ech:
        rows.append({j: Fraction(x) for j, x in enumerate(row) if x})
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        p = rows[k][c]
        rows[k] = {j: x / p for j, x in rows[k].items()}
        for i in range(k):
            f = rows[i].get(c)
            if f:
                for j, x in rows[k].items():
                    nv = rows[i].get(j, 0) - f * x
                    if nv:
                        rows[i][j] = nv
                    else:
                        rows[i].pop(j, None)
    return [{j: field(x) for j, x in row.items()} for row in rows], pivots


def rank(M: Matrix, method: str | None = None) -> int:
    return len(_reduce(M, method=method)[1])


def nullspace(M: Matrix, method: str | None = None) -> list[tuple]:
    """Kernel basis, each vector scaled so its first nonzero coordinate is 1."""
    rows, pivots = _reduce(M, method=method)
    field = M.field
    pivset = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        vec = [field.zero] * M.ncols
        vec[f] = field.one
        for row, pc in zip(rows, pivots):
            if f in row:
                vec[pc] = -row[f]
        lead = next(v for v in vec if not v.is_zero())
        if lead != 1:
            inv = lead.inv()
            vec = [v * inv for v in vec]
        basis.append(tuple(vec))
    return basis


def solve_columns(M: Matrix, columns, method: str | None = None):
    """Solve M x = b for each b; None if any system is inconsistent."""
    columns = [tuple(M.field(v) for v in b) for b in columns]
    for b in columns:
        if len(b) != M.nrows:
            raise ValueError("right-hand side has the wrong length")
    rows, pivots = _reduce(M, columns, method=method)
    # a row without a pivot in M's part must have a zero right-hand side
    for row in rows[len(pivots):]:
        if row:
            return None
    field = M.field
    sols = []
    for j in range(len(columns)):
        x = [field.zero] * M.ncols
        for row, pc in zip(rows, pivots):
            x[pc] = row.get(M.ncols + j, field.zero)
        sols.append(tuple(x))
    return sols


def solve(M: Matrix, b, method: str | None = None):
    """Some x with M x = b, or None if the system is inconsistent."""
    sols = solve_columns(M, [b], method=method)
    return None if sols is None else sols[0]
