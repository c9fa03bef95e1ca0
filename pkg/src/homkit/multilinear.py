"""Alternating multilinear forms with scalar or vector values.

A form of degree k on an n-dimensional space is stored densely on the
C(n, k) strictly increasing index tuples, enumerated lexicographically.
The normalization is evaluation-style: the wedge monomial built from
indices (i1 < ... < ik) takes the value 1 on the matching basis tuple
(no 1/k! factor).  Degrees above n are legal and simply have no keys,
so they behave as the zero form.

Unshuffles of a (first, rest) block split are enumerated as the
lexicographic subsets of positions taken by the first block; the sign
is the parity of the permutation that sorts the concatenation.
"""

from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch
from .exactmath import Matrix, as_rational, vec, vec_add, vec_is_zero, vec_scale, vec_zero


def increasing_tuples(n, k):
    return list(combinations(range(n), k))


def unshuffles(total, first_len):
    """Yield (first_positions, rest_positions, sign) over all splits."""
    positions = range(total)
    for first in combinations(positions, first_len):
        rest = tuple(p for p in positions if p not in first)
        swaps = sum(first[j] - j for j in range(first_len))
        yield first, rest, (-1) ** swaps


def _det(rows):
    """Determinant of a small square list-of-lists of Fractions."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a = [list(r) for r in rows]
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


class AltForm:
    """Alternating k-linear map with values in a value_dim-dimensional space."""

    __slots__ = ("degree", "source_dim", "value_dim", "keys", "coeffs", "_index")

    def __init__(self, degree, source_dim, value_dim, coeffs):
        self.degree = degree
        self.source_dim = source_dim
        self.value_dim = value_dim
        self.keys = increasing_tuples(source_dim, degree)
        if len(coeffs) != len(self.keys):
            raise DimensionMismatch(
                f"expected {len(self.keys)} coefficients, got {len(coeffs)}")
        self.coeffs = [vec(c) for c in coeffs]
        for c in self.coeffs:
            if len(c) != value_dim:
                raise DimensionMismatch("coefficient value has wrong length")
        self._index = {key: i for i, key in enumerate(self.keys)}

    @classmethod
    def zero(cls, degree, source_dim, value_dim=1):
        count = len(increasing_tuples(source_dim, degree))
        return cls(degree, source_dim, value_dim,
                   [vec_zero(value_dim) for _ in range(count)])

    @classmethod
    def monomial(cls, indices, source_dim, value=None):
        """Wedge monomial on the given strictly increasing 0-based indices."""
        indices = tuple(indices)
        if any(indices[i] >= indices[i + 1] for i in range(len(indices) - 1)):
            raise DimensionMismatch("monomial indices must be strictly increasing")
        if value is None:
            value = [Fraction(1)]
        f = cls.zero(len(indices), source_dim, len(value))
        f.coeffs[f._index[indices]] = vec(value)
        return f

    @classmethod
    def eps(cls, i, source_dim):
        """Dual basis covector for the i-th (0-based) basis vector."""
        return cls.monomial((i,), source_dim)

    @classmethod
    def constant(cls, value, source_dim):
        """Degree-0 form holding a single value vector."""
        value = vec(value)
        return cls(0, source_dim, len(value), [value])

    def coeff(self, key):
        return self.coeffs[self._index[tuple(key)]]

    def scalar_coeff(self, key):
        c = self.coeff(key)
        return c[0]

    def is_zero(self):
        return all(vec_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return (self.degree == other.degree
                and self.source_dim == other.source_dim
                and self.value_dim == other.value_dim
                and self.coeffs == other.coeffs)

    def __repr__(self):
        terms = {k: c for k, c in zip(self.keys, self.coeffs) if not vec_is_zero(c)}
        return (f"AltForm(degree={self.degree}, n={self.source_dim}, "
                f"m={self.value_dim}, {terms!r})")

    def _check_compatible(self, other):
        if self.source_dim != other.source_dim:
            raise DimensionMismatch("forms live on spaces of different dimension")

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree or self.value_dim != other.value_dim:
            raise DimensionMismatch("cannot add forms of different shape")
        return AltForm(self.degree, self.source_dim, self.value_dim,
                       [vec_add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = as_rational(c)
        return AltForm(self.degree, self.source_dim, self.value_dim,
                       [vec_scale(c, v) for v in self.coeffs])

    def __neg__(self):
        return self.scale(-1)

    def eval(self, args):
        """Evaluate on a list of degree-many coordinate vectors.

        Expansion by multilinearity: the value is the sum over increasing
        tuples I of coeff_I times the I-rows minor determinant of the
        argument matrix, which makes full antisymmetry automatic.
        """
        if len(args) != self.degree:
            raise DimensionMismatch(
                f"form of degree {self.degree} applied to {len(args)} arguments")
        args = [vec(a) for a in args]
        for a in args:
            if len(a) != self.source_dim:
                raise DimensionMismatch("argument vector has wrong length")
        out = vec_zero(self.value_dim)
        for key, c in zip(self.keys, self.coeffs):
            if vec_is_zero(c):
                continue
            minor = [[args[j][i] for j in range(self.degree)] for i in key]
            d = _det(minor)
            if d != 0:
                out = vec_add(out, vec_scale(d, c))
        return out

    def pullback(self, alpha):
        """Precompose every argument slot with the linear map alpha."""
        if not isinstance(alpha, Matrix):
            alpha = Matrix.from_rows(alpha)
        if alpha.rows != self.source_dim or alpha.cols != self.source_dim:
            raise DimensionMismatch("pullback map must be square of the source dimension")
        a = alpha.to_lists()
        out = []
        for jkey in self.keys:
            val = vec_zero(self.value_dim)
            for ikey, c in zip(self.keys, self.coeffs):
                if vec_is_zero(c):
                    continue
                minor = [[a[i][j] for j in jkey] for i in ikey]
                d = _det(minor)
                if d != 0:
                    val = vec_add(val, vec_scale(d, c))
            out.append(val)
        return AltForm(self.degree, self.source_dim, self.value_dim, out)

    def map_values(self, beta):
        """Postcompose the values with the linear map beta."""
        if beta.cols != self.value_dim:
            raise DimensionMismatch("value map does not match value dimension")
        return AltForm(self.degree, self.source_dim, beta.rows,
                       [beta.apply(c) for c in self.coeffs])

    def wedge(self, other):
        """Exterior product of scalar-valued forms."""
        self._check_compatible(other)
        if self.value_dim != 1 or other.value_dim != 1:
            raise DimensionMismatch("wedge is defined for scalar-valued forms")
        k, l = self.degree, other.degree
        result = AltForm.zero(k + l, self.source_dim, 1)
        for idx, key in enumerate(result.keys):
            total = Fraction(0)
            for first, rest, sign in unshuffles(k + l, k):
                a = self.scalar_coeff(tuple(key[p] for p in first))
                if a == 0:
                    continue
                b = other.scalar_coeff(tuple(key[p] for p in rest))
                if b == 0:
                    continue
                total += sign * a * b
            result.coeffs[idx] = [total]
        return result

    def diamond(self, phi):
        """Unshuffle-signed action of a scalar form on a vector-valued one.

        The scalar form takes the first block of arguments; on scalar
        values this coincides with the wedge product.
        """
        self._check_compatible(phi)
        if self.value_dim != 1:
            raise DimensionMismatch("left factor of the action must be scalar-valued")
        l, k = self.degree, phi.degree
        result = AltForm.zero(k + l, self.source_dim, phi.value_dim)
        for idx, key in enumerate(result.keys):
            total = vec_zero(phi.value_dim)
            for first, rest, sign in unshuffles(k + l, l):
                a = self.scalar_coeff(tuple(key[p] for p in first))
                if a == 0:
                    continue
                b = phi.coeff(tuple(key[p] for p in rest))
                if vec_is_zero(b):
                    continue
                total = vec_add(total, vec_scale(sign * a, b))
            result.coeffs[idx] = total
        return result
