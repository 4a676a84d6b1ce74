"""Dense exact matrices over one involutive field.

The ring under study is M_n(F) with the conjugate-transpose involution.  The
public ring interface is square-only; rectangular shapes appear solely as the
two factors of a full-rank factorization.  All operations are pure and
matrices are immutable, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .starfield import FieldDescriptor, FieldKind, FieldMismatchError, Scalar

# Exhaustive finite-ring runs and exact rational growth stay at desk scale.
MAX_DIMENSION = 6


class ShapeError(ValueError):
    """Dimension mismatch or unsupported shape."""


class MatrixParseError(ValueError):
    """Text input does not match the matrix format."""


class Matrix:
    """An immutable rows-of-scalars grid over a single field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldDescriptor, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ShapeError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        if len(rows) > MAX_DIMENSION or ncols > MAX_DIMENSION:
            raise ShapeError(f"dimension above the configured cap {MAX_DIMENSION}")
        for r in rows:
            for e in r:
                if e.field is not field:
                    raise FieldMismatchError("entry from a different field")
        self.field = field
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_ints(cls, field: FieldDescriptor, grid) -> "Matrix":
        return cls(field, [[field.from_int(k) for k in row] for row in grid])

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldDescriptor, nrows: int, ncols: int | None = None) -> "Matrix":
        zero = field.zero()
        ncols = nrows if ncols is None else ncols
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, field: FieldDescriptor, entries) -> "Matrix":
        entries = list(entries)
        zero = field.zero()
        n = len(entries)
        return cls(field, [[entries[i] if i == j else zero for j in range(n)]
                           for i in range(n)])

    # -- shape ----------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        if self.nrows != self.ncols:
            raise ShapeError("not a square matrix")
        return self.nrows

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(e.token() for e in row) for row in self.rows)
        return f"<[{body}] over {self.field.name}>"

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def _check(self, other: "Matrix", same_shape=True):
        if self.field is not other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")
        if same_shape and (self.nrows != other.nrows or self.ncols != other.ncols):
            raise ShapeError(f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    # -- ring arithmetic ------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [[a + b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [[a - b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other, same_shape=False)
        if self.ncols != other.nrows:
            raise ShapeError(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out)

    def scale(self, s: Scalar) -> "Matrix":
        return Matrix(self.field, [[s * a for a in row] for row in self.rows])

    def __pow__(self, k: int) -> "Matrix":
        if k < 1:
            raise ValueError("power must be >= 1")
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def star(self) -> "Matrix":
        """Conjugate transpose, the ring involution."""
        return Matrix(self.field, [[self.rows[j][i].star() for j in range(self.nrows)]
                                   for i in range(self.ncols)])

    # -- elimination ------------------------------------------------------------

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row echelon form by exact Gauss-Jordan.

        Pivot choice is the first nonzero entry in column order; with exact
        arithmetic there is nothing to gain from magnitude pivoting.  Returns
        (reduced matrix, rank, pivot columns).
        """
        rows = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            pr = next((i for i in range(r, nr) if not rows[i][c].is_zero()), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = rows[r][c].inv()
            rows[r] = [inv * e for e in rows[r]]
            for i in range(nr):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Matrix(self.field, rows), r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def full_rank_factorize(self) -> "RankFactorization":
        """Write A = F G with F of full column rank and G of full row rank.

        F collects the pivot columns of A, G the nonzero rows of the reduced
        form; the zero matrix has no such factorization and is rejected.
        """
        if self.is_zero():
            raise ValueError("zero matrix has no full-rank factorization")
        reduced, rank, pivots = self.rref()
        f = Matrix(self.field, [[self.rows[i][j] for j in pivots]
                                for i in range(self.nrows)])
        g = Matrix(self.field, reduced.rows[:rank])
        return RankFactorization(f, g, rank)

    def try_invert(self) -> "Matrix | None":
        """Two-sided inverse of a square matrix, or None when rank < n."""
        n = self.n
        zero, one = self.field.zero(), self.field.one()
        # Gauss-Jordan on A while mirroring the row operations onto I.
        rows = [list(self.rows[i]) for i in range(n)]
        inv_rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for c in range(n):
            pr = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
            if pr is None:
                return None
            rows[c], rows[pr] = rows[pr], rows[c]
            inv_rows[c], inv_rows[pr] = inv_rows[pr], inv_rows[c]
            s = rows[c][c].inv()
            rows[c] = [s * e for e in rows[c]]
            inv_rows[c] = [s * e for e in inv_rows[c]]
            for i in range(n):
                if i != c and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
                    inv_rows[i] = [a - f * b for a, b in zip(inv_rows[i], inv_rows[c])]
        return Matrix(self.field, inv_rows)

    # -- text format -----------------------------------------------------------

    def header(self) -> str:
        kind = self.field.kind.value
        if self.field.p is not None:
            return f"ring {kind} {self.field.p} n={self.n}"
        return f"ring {kind} n={self.n}"

    def to_text(self) -> str:
        """Header line plus n rows of whitespace-separated scalar tokens."""
        lines = [self.header()]
        lines += [" ".join(e.token() for e in row) for row in self.rows]
        return "\n".join(lines)

    def to_tokens(self) -> list[list[str]]:
        return [[e.token() for e in row] for row in self.rows]


@dataclass(frozen=True)
class RankFactorization:
    """A = F G exactly, with rank(F) = rank(G) = r = rank(A)."""

    f: Matrix
    g: Matrix
    rank: int


def parse_matrix(text: str) -> Matrix:
    """Parse the text format produced by Matrix.to_text()."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise MatrixParseError("empty input")
    head = lines[0].split()
    if not head or head[0] != "ring":
        raise MatrixParseError(f"expected 'ring ...' header, got {lines[0]!r}")
    try:
        kind = FieldKind(head[1])
    except (ValueError, IndexError):
        raise MatrixParseError(f"unknown ring kind in {lines[0]!r}") from None
    rest = head[2:]
    p = None
    if kind in (FieldKind.PRIME, FieldKind.QUAD_EXT):
        if len(rest) != 2 or not rest[0].isdigit():
            raise MatrixParseError(f"expected 'ring {kind.value} <p> n=<dim>'")
        p = int(rest[0])
        rest = rest[1:]
    if len(rest) != 1 or not rest[0].startswith("n="):
        raise MatrixParseError(f"missing n=<dim> in {lines[0]!r}")
    try:
        n = int(rest[0][2:])
    except ValueError:
        raise MatrixParseError(f"bad dimension in {lines[0]!r}") from None
    if not 1 <= n <= MAX_DIMENSION:
        raise MatrixParseError(f"dimension {n} outside 1..{MAX_DIMENSION}")
    try:
        field = FieldDescriptor.get(kind, p)
    except ValueError as exc:
        raise MatrixParseError(str(exc)) from None
    body = lines[1:]
    if len(body) != n:
        raise MatrixParseError(f"expected {n} rows, got {len(body)}")
    rows = []
    for ln in body:
        tokens = ln.split()
        if len(tokens) != n:
            raise MatrixParseError(f"expected {n} entries per row, got {len(tokens)}")
        rows.append([field.parse(t) for t in tokens])
    return Matrix(field, rows)


def parse_inline(field: FieldDescriptor, text: str) -> Matrix:
    """Parse 'a b; c d' style input with semicolon-separated rows."""
    rows = []
    for chunk in text.split(";"):
        tokens = chunk.split()
        if tokens:
            rows.append([field.parse(t) for t in tokens])
    if not rows:
        raise MatrixParseError("empty matrix")
    if any(len(r) != len(rows) for r in rows):
        raise MatrixParseError("inline matrix must be square")
    return Matrix(field, rows)
