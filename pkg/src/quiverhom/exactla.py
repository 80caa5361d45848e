"""Exact dense linear algebra over the rationals and over prime fields.

Every scalar is either a ``fractions.Fraction`` (characteristic 0) or an
``int`` in ``[0, p)`` (characteristic ``p``).  All arithmetic is exact; there
is no floating point anywhere in this package.  Matrices are dense and
row-major, which is entirely adequate for the desk-scale algebras handled
here (dimension <= 10, modules a few dozen coordinates at most).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, List, Optional, Sequence, Tuple, Union

Scalar = Union[Fraction, int]


class FieldMismatch(ValueError):
    """Two operands live over different field descriptors."""


@dataclass(frozen=True)
class Rationals:
    """Field descriptor for arbitrary-precision rational arithmetic.

    ``Fraction`` keeps numerator and denominator coprime with a positive
    denominator, so equality of scalars is structural equality.
    """

    characteristic: int = 0

    def coerce(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def random(self, rng: Random) -> Fraction:
        # Small integers keep certificate matrices readable and fast.
        return Fraction(rng.randint(-3, 3))

    def random_nonzero(self, rng: Random) -> Fraction:
        while True:
            v = self.random(rng)
            if v != 0:
                return v

    def to_str(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """Field descriptor for Z/p with p prime.  Elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("prime field needs p >= 2")
        # Deterministic trial division; fixture fields are tiny.
        n = self.p
        d = 2
        while d * d <= n:
            if n % d == 0:
                raise ValueError(f"{n} is not prime")
            d += 1

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, value) -> int:
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return (num * pow(den, -1, self.p)) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def random(self, rng: Random) -> int:
        return rng.randrange(self.p)

    def random_nonzero(self, rng: Random) -> int:
        return rng.randrange(1, self.p)

    def to_str(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return f"GF({self.p})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def require_big_field(field: Field, what: str) -> None:
    """Randomized searches need char 0 or p >= 11 to be worth running."""
    if field.characteristic != 0 and field.characteristic < 11:
        raise ValueError(
            f"{what} requires characteristic 0 or a prime field with p >= 11, "
            f"got {field}"
        )


class Mat:
    """A dense matrix over one field descriptor, entries row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int,
                 entries: Sequence[Scalar]):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.entries[i * n + i] = field.one
        return m

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            entries.extend(field.coerce(v) for v in r)
        return cls(field, nrows, ncols, entries)

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Mat":
        return cls(field, len(values), 1, [field.coerce(v) for v in values])

    @classmethod
    def random(cls, field: Field, rows: int, cols: int, rng: Random) -> "Mat":
        return cls(field, rows, cols,
                   [field.random(rng) for _ in range(rows * cols)])

    # -- access ------------------------------------------------------------

    def get(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def set(self, i: int, j: int, v: Scalar) -> None:
        self.entries[i * self.cols + j] = v

    def row(self, i: int) -> List[Scalar]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> List[Scalar]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> List[List[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def copy(self) -> "Mat":
        return Mat(self.field, self.rows, self.cols, list(self.entries))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(self.entries)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.to_str(v) for v in self.row(i))
                         for i in range(self.rows))
        return f"Mat({self.rows}x{self.cols} over {self.field}: {body})"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(v == z for v in self.entries)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Mat") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        add = self.field.add
        return Mat(self.field, self.rows, self.cols,
                   [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        sub = self.field.sub
        return Mat(self.field, self.rows, self.cols,
                   [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def scale(self, c: Scalar) -> "Mat":
        mul = self.field.mul
        return Mat(self.field, self.rows, self.cols,
                   [mul(c, v) for v in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        out = [f.zero] * (n * m)
        a, b = self.entries, other.entries
        for i in range(n):
            base = i * k
            for t in range(k):
                av = a[base + t]
                if av == 0:
                    continue
                brow = t * m
                orow = i * m
                for j in range(m):
                    bv = b[brow + j]
                    if bv != 0:
                        out[orow + j] = f.add(out[orow + j], f.mul(av, bv))
        return Mat(f, n, m, out)

    def transpose(self) -> "Mat":
        out = [self.field.zero] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.entries[i * self.cols + j]
        return Mat(self.field, self.cols, self.rows, out)

    def hstack(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        entries = [v for r in rows for v in r]
        return Mat(self.field, self.rows, self.cols + other.cols, entries)

    def vstack(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Mat(self.field, self.rows + other.rows, self.cols,
                   self.entries + other.entries)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Mat":
        entries = [self.entries[i * self.cols + j]
                   for i in row_idx for j in col_idx]
        return Mat(self.field, len(row_idx), len(col_idx), entries)

    def select_columns(self, col_idx: Sequence[int]) -> "Mat":
        return self.submatrix(range(self.rows), col_idx)


@dataclass(frozen=True)
class RrefResult:
    rank: int
    pivots: Tuple[int, ...]
    reduced: Mat


def rref(m: Mat) -> RrefResult:
    """Reduced row-echelon form (Gauss-Jordan, exact arithmetic).

    Returns the rank, the pivot column indices and the unique RREF matrix.
    """
    f = m.field
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots: List[int] = []
    prow = 0
    for pcol in range(ncols):
        sel = None
        for i in range(prow, nrows):
            if rows[i][pcol] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        inv = f.inv(rows[prow][pcol])
        if inv != f.one:
            rows[prow] = [f.mul(inv, v) for v in rows[prow]]
        for i in range(nrows):
            if i == prow:
                continue
            c = rows[i][pcol]
            if c == 0:
                continue
            src = rows[prow]
            dst = rows[i]
            for j in range(pcol, ncols):
                if src[j] != 0:
                    dst[j] = f.sub(dst[j], f.mul(c, src[j]))
        pivots.append(pcol)
        prow += 1
        if prow == nrows:
            break
    entries = [v for r in rows for v in r]
    return RrefResult(len(pivots), tuple(pivots), Mat(f, nrows, ncols, entries))


def rank(m: Mat) -> int:
    return rref(m).rank


def kernel_basis(m: Mat) -> Mat:
    """Columns form a basis of the null space of ``m``.

    Column count is ``cols(m) - rank(m)``; for each free column of the RREF
    the standard back-substituted kernel vector is emitted.
    """
    f = m.field
    res = rref(m)
    red = res.reduced
    pivot_set = set(res.pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = Mat.zeros(f, m.cols, len(free))
    for t, j in enumerate(free):
        basis.set(j, t, f.one)
        for r, pc in enumerate(res.pivots):
            v = red.get(r, j)
            if v != 0:
                basis.set(pc, t, f.neg(v))
    return basis


def solve(a: Mat, b: Mat) -> Optional[Mat]:
    """Some exact solution ``x`` of ``a @ x = b``, or ``None`` if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve")
    f = a.field
    aug = rref(a.hstack(b))
    for pc in aug.pivots:
        if pc >= a.cols:
            return None
    x = Mat.zeros(f, a.cols, b.cols)
    red = aug.reduced
    for r, pc in enumerate(aug.pivots):
        for j in range(b.cols):
            x.set(pc, j, red.get(r, a.cols + j))
    return x


def column_space_basis(m: Mat) -> Mat:
    """The pivot columns of ``m`` (a basis of its column space)."""
    res = rref(m)
    return m.select_columns(res.pivots)


def coordinates(basis: Mat, vectors: Mat) -> Optional[Mat]:
    """Express ``vectors`` in the given column ``basis`` (None if outside)."""
    return solve(basis, vectors)


def extend_to_basis(field: Field, partial: Mat) -> List[int]:
    """Indices of standard basis vectors completing ``partial`` to a basis.

    ``partial`` has full column rank; the returned coordinate indices are the
    greedy (smallest-index) completion.
    """
    n = partial.rows
    stacked = partial.hstack(Mat.identity(field, n))
    res = rref(stacked)
    return [p - partial.cols for p in res.pivots if p >= partial.cols]


def invert(m: Mat) -> Optional[Mat]:
    """Exact inverse, or None if ``m`` is singular (or not square)."""
    if m.rows != m.cols:
        return None
    res = rref(m.hstack(Mat.identity(m.field, m.rows)))
    # a pivot in the identity block means m itself is rank-deficient
    if any(p >= m.cols for p in res.pivots):
        return None
    return res.reduced.select_columns(range(m.cols, 2 * m.cols))


def stack_columns(field: Field, cols: Iterable[Mat]) -> Mat:
    """Horizontally concatenate column blocks (empty input gives 0 columns)."""
    out: Optional[Mat] = None
    for c in cols:
        out = c if out is None else out.hstack(c)
    if out is None:
        raise ValueError("stack_columns needs the row count; got no blocks")
    return out


def flatten(m: Mat) -> List[Scalar]:
    """Row-major entry list (used to take ranks of sets of matrices)."""
    return list(m.entries)
