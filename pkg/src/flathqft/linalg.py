"""Exact integer matrix algebra: Smith normal form, solving, kernels.

Everything runs on arbitrary-precision Python integers; no floating point is
involved anywhere.  The Smith normal form keeps the full unimodular transforms
(and their inverses, which come for free by applying inverse elementary
operations as we go), so homology generators and witnesses can be read off
without a second pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


class IntMatrix:
    """A dense integer matrix with exact arithmetic."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: list[list[int]]):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: int, cols: int, entries: Sequence[Sequence[int]]) -> "IntMatrix":
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise InputError("entry list does not match the declared shape")
        return cls(rows, cols, [list(map(int, r)) for r in entries])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = len(columns)
        if any(len(c) != rows for c in columns):
            raise InputError("column length mismatch")
        return cls(rows, cols, [[columns[j][i] for j in range(cols)] for i in range(rows)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise InputError(f"index {ij} out of bounds for {self.rows}x{self.cols}")
        return self._data[i][j]

    def row(self, i: int) -> list[int]:
        return list(self._data[i])

    def column(self, j: int) -> list[int]:
        return [self._data[i][j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [[self._data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shapes not composable")
        a, b = self._data, other._data
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ai, oi = a[i], out[i]
            for k in range(self.cols):
                aik = ai[k]
                if aik == 0:
                    continue
                bk = b[k]
                for j in range(other.cols):
                    oi[j] += aik * bk[j]
        return IntMatrix(self.rows, other.cols, out)

    def mul_vec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise InputError("vector length does not match matrix columns")
        return [sum(r[j] * v[j] for j in range(self.cols)) for r in self._data]

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in r) for r in self._data)

    def diagonal(self) -> list[int]:
        return [self._data[i][i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._data == other._data)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, {self._data})"


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise InputError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = [list(r) for r in A._data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    """U*A*V = S with U, V unimodular and S diagonal with d_i | d_{i+1}.

    ``u_inv`` and ``v_inv`` are the exact inverses of U and V, accumulated
    during the reduction.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.S.diagonal() if d != 0)

    def verify(self, A: IntMatrix) -> bool:
        """Recompute all the decomposition invariants from scratch."""
        if self.U.mul(A).mul(self.V) != self.S:
            return False
        if self.U.mul(self.u_inv) != IntMatrix.identity(A.rows):
            return False
        if self.V.mul(self.v_inv) != IntMatrix.identity(A.cols):
            return False
        if abs(determinant(self.U)) != 1 or abs(determinant(self.V)) != 1:
            return False
        d = self.S.diagonal()
        for i in range(self.S.rows):
            for j in range(self.S.cols):
                if i != j and self.S[i, j] != 0:
                    return False
        if any(x < 0 for x in d):
            return False
        for i in range(len(d) - 1):
            if d[i] != 0 and d[i + 1] % d[i] != 0:
                return False
            if d[i] == 0 and d[i + 1] != 0:
                return False
        return True


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms and their inverses.

    Pivot choice: smallest non-zero magnitude, ties broken lexicographically
    by position, so the output is deterministic.
    """
    r, c = A.rows, A.cols
    s = [list(row) for row in A._data]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    ui = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    vi = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        sd, ss = s[dst], s[src]
        for j in range(c):
            sd[j] += q * ss[j]
        ud, us = u[dst], u[src]
        for j in range(r):
            ud[j] += q * us[j]
        for row in ui:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]
        vd, vs = vi[dst], vi[src]
        for j in range(c):
            vs[j] -= q * vd[j]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for row in ui:
            row[i] = -row[i]

    def find_pivot(t):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = abs(s[i][j])
                if x != 0 and (best is None or x < best[0]):
                    best = (x, i, j)
        return best

    t = 0
    while t < min(r, c):
        if find_pivot(t) is None:
            break
        while True:
            # always reduce against the smallest entry of the submatrix;
            # re-selecting the pivot every pass keeps the quotients (and
            # therefore the intermediate entries) small
            _, pi, pj = find_pivot(t)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            clean = True
            for i in range(t + 1, r):
                if s[i][t] != 0:
                    add_row(i, t, -(s[i][t] // s[t][t]))
                    if s[i][t] != 0:
                        clean = False
            if not clean:
                continue
            for j in range(t + 1, c):
                if s[t][j] != 0:
                    add_col(j, t, -(s[t][j] // s[t][t]))
                    if s[t][j] != 0:
                        clean = False
            if not clean:
                continue
            # pivot must divide the remaining submatrix for the chain d_i | d_{i+1}
            stain = None
            p = s[t][t]
            for i in range(t + 1, r):
                row = s[i]
                for j in range(t + 1, c):
                    if row[j] % p != 0:
                        stain = i
                        break
                if stain is not None:
                    break
            if stain is None:
                break
            add_row(t, stain, 1)
        if s[t][t] < 0:
            negate_row(t)
        t += 1

    return SmithDecomposition(
        U=IntMatrix(r, r, u),
        S=IntMatrix(r, c, s),
        V=IntMatrix(c, c, v),
        u_inv=IntMatrix(r, r, ui),
        v_inv=IntMatrix(c, c, vi),
    )


def solve_integer(A: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """Some integer solution x of A x = b, or None if there is none.

    Any returned solution is verified by multiplication before being handed
    back.  For many right-hand sides against one matrix use IntegerSolver.
    """
    return IntegerSolver(A).solve(b)


class IntegerSolver:
    """Solve A x = b for many right-hand sides with one Smith decomposition."""

    def __init__(self, A: IntMatrix):
        self.A = A
        self.snf = smith_normal_form(A)
        self._diag = self.snf.S.diagonal()

    def solve(self, b: Sequence[int]) -> list[int] | None:
        A = self.A
        if len(b) != A.rows:
            raise InputError(f"right-hand side has length {len(b)}, expected {A.rows}")
        c = self.snf.U.mul_vec(list(b))
        y = [0] * A.cols
        for i in range(A.rows):
            di = self._diag[i] if i < len(self._diag) else 0
            if di == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % di != 0:
                    return None
                if i < A.cols:
                    y[i] = c[i] // di
        x = self.snf.V.mul_vec(y)
        assert A.mul_vec(x) == list(b)
        return x


def kernel_basis(A: IntMatrix) -> list[list[int]]:
    """A basis of the integer kernel lattice of A (saturated)."""
    snf = smith_normal_form(A)
    d = snf.S.diagonal()
    basis = []
    for j in range(A.cols):
        if j >= len(d) or d[j] == 0:
            basis.append(snf.V.column(j))
    return basis


def matrix_from_columns(rows: int, columns: Iterable[Sequence[int]]) -> IntMatrix:
    return IntMatrix.from_columns(rows, list(columns))
