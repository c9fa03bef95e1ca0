"""Exact rational scalars, dense matrices and subspaces.

Scalars are :class:`fractions.Fraction` values (canonical form is
guaranteed by the Fraction constructor: lowest terms, positive
denominator, zero as 0/1).  They serialize as ``"p/q"``, or ``"p"``
when the denominator is 1.

Matrices store their entries in the flat numerator/denominator form
consumed by the kernel backend, so bulk operations run at kernel speed;
element access converts to Fraction at the boundary.  All values are
immutable after construction and all operations are pure.
"""

from fractions import Fraction

from . import _kernel as K
from .errors import DimensionMismatch, InvariantViolation, ParseError, SingularMatrix

Rational = Fraction


def as_rational(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise ParseError(f"cannot interpret {x!r} as a rational number")


def parse_rational(text):
    """Parse "p" or "p/q" with integer p, q and q != 0."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den == 0:
                raise ParseError(f"zero denominator in rational literal {text!r}")
            return Fraction(num, den)
    except ValueError:
        pass
    raise ParseError(f"malformed rational literal {text!r}")


def format_rational(x):
    """Canonical rendering: "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def vec(entries):
    return [as_rational(e) for e in entries]


def vec_zero(n):
    return [Fraction(0)] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_is_zero(u):
    return all(a == 0 for a in u)


def basis_vec(i, n):
    v = vec_zero(n)
    v[i] = Fraction(1)
    return v


class Matrix:
    """Dense matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "nums", "dens")

    def __init__(self, rows, cols, nums, dens):
        # raw constructor: nums/dens must already be canonical
        self.rows = rows
        self.cols = cols
        self.nums = nums
        self.dens = dens

    @classmethod
    def from_rows(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        nums, dens = [], []
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix rows")
            for e in row:
                f = as_rational(e)
                nums.append(f.numerator)
                dens.append(f.denominator)
        return cls(rows, cols, nums, dens)

    @classmethod
    def from_fractions_flat(cls, rows, cols, flat):
        nums = [f.numerator for f in flat]
        dens = [f.denominator for f in flat]
        return cls(rows, cols, nums, dens)

    @classmethod
    def identity(cls, n):
        nums = [0] * (n * n)
        for i in range(n):
            nums[i * n + i] = 1
        return cls(n, n, nums, [1] * (n * n))

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols), [1] * (rows * cols))

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        m = cls.zero(n, n)
        for i, e in enumerate(entries):
            f = as_rational(e)
            m.nums[i * n + i] = f.numerator
            m.dens[i * n + i] = f.denominator
        return m

    @classmethod
    def from_columns(cls, columns, rows=None):
        cols = len(columns)
        if rows is None:
            rows = len(columns[0]) if cols else 0
        nums = [0] * (rows * cols)
        dens = [1] * (rows * cols)
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise DimensionMismatch("ragged matrix columns")
            for i, e in enumerate(col):
                f = as_rational(e)
                nums[i * cols + j] = f.numerator
                dens[i * cols + j] = f.denominator
        return cls(rows, cols, nums, dens)

    def __getitem__(self, key):
        i, j = key
        k = i * self.cols + j
        return Fraction(self.nums[k], self.dens[k])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.nums == other.nums and self.dens == other.dens)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.nums), tuple(self.dens)))

    def __repr__(self):
        return f"Matrix({self.to_lists()!r})"

    def to_lists(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def row(self, i):
        return [self[i, j] for j in range(self.cols)]

    def column(self, j):
        return [self[i, j] for i in range(self.rows)]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cn, cd = K.mat_mul(self.nums, self.dens, other.nums, other.dens,
                           self.rows, self.cols, other.cols)
        return Matrix(self.rows, other.cols, cn, cd)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")
        cn, cd = K.mat_add(self.nums, self.dens, other.nums, other.dens)
        return Matrix(self.rows, self.cols, cn, cd)

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")
        cn, cd = K.mat_sub(self.nums, self.dens, other.nums, other.dens)
        return Matrix(self.rows, self.cols, cn, cd)

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-n for n in self.nums], list(self.dens))

    def scale(self, c):
        f = as_rational(c)
        cn, cd = K.mat_scale(self.nums, self.dens, f.numerator, f.denominator)
        return Matrix(self.rows, self.cols, cn, cd)

    def transpose(self):
        r, c = self.rows, self.cols
        nums = [0] * (r * c)
        dens = [1] * (r * c)
        for i in range(r):
            for j in range(c):
                nums[j * r + i] = self.nums[i * c + j]
                dens[j * r + i] = self.dens[i * c + j]
        return Matrix(c, r, nums, dens)

    def apply(self, vector):
        """Matrix-vector product on a list of Fractions."""
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        vn = [f.numerator for f in vector]
        vd = [f.denominator for f in vector]
        cn, cd = K.mat_mul(self.nums, self.dens, vn, vd, self.rows, self.cols, 1)
        return [Fraction(n, d) for n, d in zip(cn, cd)]

    def is_zero(self):
        return not any(self.nums)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        return self == Matrix.identity(self.rows)

    def rref(self):
        """Reduced row-echelon form and the list of pivot columns."""
        rn, rd, piv = K.rref(self.nums, self.dens, self.rows, self.cols)
        return Matrix(self.rows, self.cols, rn, rd), piv

    def rank(self):
        _, piv = self.rref()
        return len(piv)

    def inverse(self):
        """Exact two-sided inverse; raises SingularMatrix below full rank."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.rows
        aug = Matrix.zero(n, 2 * n)
        for i in range(n):
            for j in range(n):
                aug.nums[i * 2 * n + j] = self.nums[i * n + j]
                aug.dens[i * 2 * n + j] = self.dens[i * n + j]
            aug.nums[i * 2 * n + n + i] = 1
        red, piv = aug.rref()
        if piv != list(range(n)):
            raise SingularMatrix(f"matrix of rank {len([p for p in piv if p < n])} < {n}")
        inv = Matrix.zero(n, n)
        for i in range(n):
            for j in range(n):
                inv.nums[i * n + j] = red.nums[i * 2 * n + n + j]
                inv.dens[i * n + j] = red.dens[i * 2 * n + n + j]
        return inv

    def power(self, k):
        """Non-negative matrix power (k >= 0); negative k uses the inverse."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have powers")
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.rows)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def det(self):
        """Determinant by fraction-exact elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant needs a square matrix")
        n = self.rows
        a = [[self[i, j] for j in range(n)] for i in range(n)]
        det = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[p], a[c] = a[c], a[p]
                det = -det
            det *= a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] * inv
                    for cc in range(c, n):
                        a[r][cc] -= f * a[c][cc]
        return det

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def nullspace(m):
    """Basis of {x : Mx = 0} in the deterministic reduced form.

    Each free column f of the RREF contributes one basis vector with a 1
    in position f and the negated reduced entries in the pivot positions;
    vectors are ordered by increasing free column.
    """
    red, piv = m.rref()
    pivset = set(piv)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = vec_zero(m.cols)
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -red[r, f]
        basis.append(v)
    return Subspace(m.cols, basis)


class Subspace:
    """Span of an explicit list of linearly independent vectors."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis):
        for v in basis:
            if len(v) != ambient_dim:
                raise DimensionMismatch("basis vector length != ambient dimension")
        basis = [vec(v) for v in basis]
        if basis:
            m = Matrix.from_rows(basis)
            if m.rank() != len(basis):
                raise InvariantViolation("basis vectors are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        """Membership test: does adding v keep the rank unchanged?"""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        if not self.basis:
            return vec_is_zero(vec(v))
        m = Matrix.from_rows(self.basis + [vec(v)])
        return m.rank() == len(self.basis)

    def coordinates(self, v):
        """Coefficients of v in this basis; None when v is outside the span."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        v = vec(v)
        if not self.basis:
            return [] if vec_is_zero(v) else None
        cols = Matrix.from_columns(self.basis + [v])
        red, piv = cols.rref()
        if self.dim in piv:
            return None
        return [red[r, self.dim] for r in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        return all(other.contains(v) for v in self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def membership(s, v):
    return s.contains(v)


def inverse(m):
    return m.inverse()
