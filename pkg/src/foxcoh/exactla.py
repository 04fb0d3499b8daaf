"""Exact dense linear algebra over F and over the integers.

Ranks are computed over F = Q(sqrt3, sqrt5). Since F sits inside the
reals and rank does not change under field extension, a rank over F is
also the rank over R of the same matrix.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import DegenerateFormError, NonHermitianError
from .field import ONE, QONE, QZERO, ZERO, FieldElement, Quaternion

Vector = list  # list of FieldElement


class FMatrix:
    """Immutable rows x cols matrix with entries in F."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = [FieldElement.coerce(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._data = tuple(
            tuple(entries[r * cols:(r + 1) * cols]) for r in range(rows)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int):
        columns = [list(c) for c in columns]
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @property
    def entries(self) -> tuple:
        return tuple(e for row in self._data for e in row)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> list:
        return [row[j] for row in self._data]

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._data for e in row)

    def transpose(self) -> FMatrix:
        return FMatrix.from_columns(self._data, self.cols) if self.rows else FMatrix(self.cols, 0, [])

    T = property(transpose)

    def __add__(self, other: FMatrix) -> FMatrix:
        self._check_shape(other)
        return FMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: FMatrix) -> FMatrix:
        self._check_shape(other)
        return FMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return FMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> FMatrix:
        c = FieldElement.coerce(c)
        return FMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if isinstance(other, FMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = []
            ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
            for row in self._data:
                nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
                for col in ocols:
                    acc = ZERO
                    for k, a in nz:
                        b = col[k]
                        if not b.is_zero():
                            acc = acc + a * b
                    out.append(acc)
            return FMatrix(self.rows, other.cols, out)
        # matrix-vector
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [_dot(row, vec) for row in self._data]

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self):
        return f"FMatrix({self.rows}x{self.cols})"


def _dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if not (a.is_zero() or b.is_zero()):
            acc = acc + a * b
    return acc


def vstack(blocks: Sequence[FMatrix]) -> FMatrix:
    cols = blocks[0].cols
    rows = []
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column mismatch in vstack")
        rows.extend(b.tolist())
    return FMatrix(len(rows), cols, [e for r in rows for e in r])


def hstack(blocks: Sequence[FMatrix]) -> FMatrix:
    nrows = blocks[0].rows
    if any(b.rows != nrows for b in blocks):
        raise ValueError("row mismatch in hstack")
    rows = [[e for b in blocks for e in b.row(i)] for i in range(nrows)]
    return FMatrix(nrows, sum(b.cols for b in blocks), [e for r in rows for e in r])


def block_matrix(blocks: Sequence[Sequence[FMatrix]]) -> FMatrix:
    return vstack([hstack(list(row)) for row in blocks])


def _echelon(rows: list, ncols: int, reduce: bool = False):
    """In-place Gaussian elimination; returns the pivot columns.

    The pivot in each column is the first nonzero entry at or below the
    current row. With ``reduce`` the result is in reduced row echelon form.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = prow[c].inverse()
        if reduce and inv != ONE:
            prow = [e * inv if not e.is_zero() else e for e in prow]
            rows[r] = prow
            inv = ONE
        span = [k for k in range(c, ncols) if not prow[k].is_zero()]
        targets = range(nrows) if reduce else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f.is_zero():
                continue
            f = f * inv
            for k in span:
                row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def rank(M: FMatrix) -> int:
    rows = M.tolist()
    return len(_echelon(rows, M.cols))


def kernel_basis(M: FMatrix) -> list:
    """Basis of the right null space, one vector per free column.

    Each vector has a 1 in its free column and zeros in the other free
    columns, so the ordering follows the free columns left to right.
    """
    rows = M.tolist()
    pivots = _echelon(rows, M.cols, reduce=True)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(v)
    return basis


def solve(M: FMatrix, b: Sequence) -> Optional[list]:
    """Some exact solution of ``M x = b``, or None when inconsistent."""
    b = [FieldElement.coerce(e) for e in b]
    if len(b) != M.rows:
        raise ValueError("right-hand side length mismatch")
    rows = [list(r) + [bi] for r, bi in zip(M.tolist(), b)]
    pivots = _echelon(rows, M.cols + 1, reduce=True)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [ZERO] * M.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][M.cols]
    return x


class LinearSolver:
    """Precomputed solver for ``M x = b`` with M of full column rank.

    Picks an invertible square subset of rows once, so repeated solves
    cost one matrix-vector product plus a consistency check.
    """

    def __init__(self, M: FMatrix):
        self.matrix = M
        rows = M.transpose().tolist()
        pivots = _echelon(rows, M.rows)
        if len(pivots) != M.cols:
            raise ValueError("matrix does not have full column rank")
        self.rows = pivots
        square = FMatrix.from_rows([M.row(i) for i in pivots])
        self.inverse = inverse(square)

    def solve(self, b: Sequence) -> Optional[list]:
        x = self.inverse @ [b[i] for i in self.rows]
        if self.matrix @ x != list(b):
            return None
        return x


def inverse(M: FMatrix) -> FMatrix:
    n = M.rows
    if M.cols != n:
        raise ValueError("inverse of non-square matrix")
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(M.tolist())]
    pivots = _echelon(rows, 2 * n, reduce=True)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return FMatrix.from_rows([r[n:] for r in rows])


# Integer matrices and Smith normal form


class IntMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, [e for r in rows for e in r])

    def tolist(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"


def smith_diagonal(M: IntMatrix) -> list:
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    A = M.tolist()
    m, n = M.rows, M.cols
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # pivot must divide the rest of the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(cands)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_normal_form(M: IntMatrix) -> tuple:
    """(invariant factors > 1, free rank) of the cokernel Z^rows / image(M)."""
    diag = smith_diagonal(M)
    factors = tuple(d for d in diag if d != 1)
    return factors, M.rows - len(diag)


# Quaternion matrices


class QuatMatrix:
    """Immutable 3x3 (or n x n) matrix of quaternions acting on columns."""

    __slots__ = ("n", "_data", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        self._data = tuple(tuple(Quaternion.coerce(e) for e in row) for row in rows)
        self.n = len(self._data)
        if any(len(r) != self.n for r in self._data):
            raise ValueError("quaternion matrices must be square")
        self._hash = None

    @classmethod
    def identity(cls, n: int = 3):
        return cls([[QONE if i == j else QZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else QZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_real_coords(cls, coords: Sequence, n: int = 3):
        """Inverse of :meth:`real_coords`."""
        it = iter(coords)
        return cls([[Quaternion(next(it), next(it), next(it), next(it)) for _ in range(n)] for _ in range(n)])

    def real_coords(self) -> list:
        """Entries flattened row-major, each as (w, x, y, z)."""
        return [c for row in self._data for q in row for c in q.parts]

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def tolist(self):
        return [list(r) for r in self._data]

    def __eq__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._data)
        return self._hash

    def is_complex(self) -> bool:
        return all(q.is_complex() for row in self._data for q in row)

    def is_zero(self) -> bool:
        return all(q.is_zero() for row in self._data for q in row)

    def __add__(self, other):
        return QuatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other):
        return QuatMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self):
        return QuatMatrix([[-a for a in r] for r in self._data])

    def scale(self, c) -> QuatMatrix:
        return QuatMatrix([[a * c for a in r] for r in self._data])

    def __matmul__(self, other: QuatMatrix) -> QuatMatrix:
        n = self.n
        B = other._data
        out = []
        for row in self._data:
            new = []
            for j in range(n):
                acc = QZERO
                for k in range(n):
                    a, b = row[k], B[k][j]
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return QuatMatrix(out)

    def conj_transpose(self) -> QuatMatrix:
        n = self.n
        return QuatMatrix([[self._data[j][i].conjugate() for j in range(n)] for i in range(n)])

    star = property(conj_transpose)

    def trace(self) -> Quaternion:
        acc = QZERO
        for i in range(self.n):
            acc = acc + self._data[i][i]
        return acc

    def __repr__(self):
        return "QuatMatrix(" + repr([[str(q) for q in r] for r in self._data]) + ")"


def complex_det3(J: QuatMatrix) -> Quaternion:
    """Determinant of a 3x3 matrix with complex entries (commutative)."""
    a = J
    return (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def complex_inverse3(J: QuatMatrix) -> QuatMatrix:
    """Inverse of a 3x3 complex-entry matrix by the adjugate."""
    if not J.is_complex():
        raise ValueError("complex_inverse3 needs complex entries")
    det = complex_det3(J)
    if det.is_zero():
        raise ZeroDivisionError("singular matrix")
    inv_det = det.inverse()
    a = J
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [y for y in range(3) if y != j]
            minor = a[r[0], c[0]] * a[r[1], c[1]] - a[r[0], c[1]] * a[r[1], c[0]]
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return QuatMatrix([[cof[j][i] * inv_det for j in range(3)] for i in range(3)])


def _descartes(coeffs) -> int:
    signs = [s for s in (c.sign() for c in coeffs) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def hermitian_signature(J: QuatMatrix) -> tuple:
    """(positive, negative) eigenvalue counts of a complex Hermitian 3x3 J.

    The characteristic polynomial of a Hermitian matrix has only real
    roots, so Descartes' rule of signs counts them exactly.
    """
    if J.n != 3 or not J.is_complex():
        raise NonHermitianError("expected a 3x3 matrix with complex entries")
    if J.conj_transpose() != J:
        raise NonHermitianError("J* != J")
    det = complex_det3(J).w
    if det.is_zero():
        raise DegenerateFormError("degenerate form: det J = 0")
    tr = J.trace().w
    minors = ZERO
    for i, j in ((0, 1), (0, 2), (1, 2)):
        minors = minors + (J[i, i] * J[j, j] - J[i, j] * J[j, i]).w
    # det(t I - J) = t^3 - tr t^2 + minors t - det
    p = [ONE, -tr, minors, -det]
    p_neg = [-ONE, -tr, -minors, -det]  # coefficients of p(-t)
    return _descartes(p), _descartes(p_neg)
