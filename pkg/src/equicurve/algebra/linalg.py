"""Dense exact linear algebra over a finite field (Gaussian elimination)."""

from __future__ import annotations

from .field import FieldElement, FieldSpec


def _codes(field: FieldSpec, row) -> tuple[int, ...]:
    return tuple(x.code if isinstance(x, FieldElement) else int(x) for x in row)


class Matrix:
    """Immutable matrix of field codes."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        self.field = field
        self.rows = tuple(_codes(field, r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FieldSpec, r: int, c: int) -> "Matrix":
        return cls(field, [[0] * c for _ in range(r)], c)

    @classmethod
    def from_ints(cls, field: FieldSpec, rows) -> "Matrix":
        return cls(field, [[field.from_int(int(x)) for x in r] for r in rows])

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_lists()})"

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = self.field
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = 0
                for a, b in zip(r, col):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, other.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def apply(self, vec) -> tuple[int, ...]:
        F = self.field
        v = _codes(F, vec)
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = Matrix(self.field, [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)])
        red, piv = rref(aug)
        if piv[:n] != list(range(n)) or len([p for p in piv if p < n]) != n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(self.field, [r[n:] for r in red.rows[:n]], n)

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result


def vstack(mats: list[Matrix]) -> Matrix:
    field = mats[0].field
    rows = [r for m in mats for r in m.rows]
    return Matrix(field, rows, mats[0].ncols)


def hstack(mats: list[Matrix]) -> Matrix:
    field = mats[0].field
    rows = [sum((m.rows[i] for m in mats), ()) for i in range(mats[0].nrows)]
    return Matrix(field, rows, sum(m.ncols for m in mats))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    F = m.field
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix(F, rows, m.ncols), pivots


def kernel_basis(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel, one vector per free column in increasing order.

    The vector for free column j has a 1 in position j and 0 in every other
    free column, so the basis is the reduced echelon basis of the kernel.
    """
    F = m.field
    n = m.ncols
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for j in range(n):
        if j in pivset:
            continue
        v = [0] * n
        v[j] = 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = F.neg(red.rows[row_idx][j])
        basis.append(tuple(v))
    return basis


def nullity(m: Matrix) -> int:
    return m.ncols - m.rank()


def solve(m: Matrix, rhs) -> tuple[int, ...] | None:
    """One solution of m v = rhs (free variables set to zero), or None."""
    F = m.field
    b = _codes(F, rhs)
    aug = Matrix(F, [list(r) + [b[i]] for i, r in enumerate(m.rows)], m.ncols + 1)
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    v = [0] * m.ncols
    for row_idx, pc in enumerate(pivots):
        v[pc] = red.rows[row_idx][m.ncols]
    return tuple(v)


def row_space_contains(m: Matrix, vec) -> bool:
    """Whether vec lies in the row space of m (rank test)."""
    if m.nrows == 0:
        return all(x == 0 for x in _codes(m.field, vec))
    return Matrix(m.field, list(m.rows) + [_codes(m.field, vec)]).rank() == m.rank()


def matrix_group_order(gens: list[Matrix], limit: int = 100000) -> int:
    """Order of the group generated by invertible matrices (closure by BFS)."""
    if not gens:
        return 1
    ident = Matrix.identity(gens[0].field, gens[0].nrows)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > limit:
                        raise ValueError("matrix group exceeds enumeration limit")
        frontier = nxt
    return len(seen)
