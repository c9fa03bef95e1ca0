"""Twisted Lie structures: axiom checkers and the fixture catalog.

A ``HomLieAlgebra`` is a finite-dimensional space with a skewsymmetric
bracket given by structure constants c[i][j][k] (meaning
[e_i, e_j] = sum_k c[i][j][k] e_k) and a linear twist alpha.  The
checkers report, they never raise; witnesses are 1-based index tuples
identifying the first failing basis combination in lexicographic order.

Structure constants are also kept in the flat kernel layout so the
sweeps over basis pairs and triples run as matrix products.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _kernel as K
from .errors import DimensionMismatch, InvariantViolation
from .exactmath import Matrix, Subspace, as_rational, vec, vec_is_zero, vec_zero


def _flat_table(table, dim, vdim):
    nums = [0] * (dim * dim * vdim)
    dens = [1] * (dim * dim * vdim)
    for i in range(dim):
        for j in range(dim):
            base = (i * dim + j) * vdim
            for k in range(vdim):
                f = table[i][j][k]
                nums[base + k] = f.numerator
                dens[base + k] = f.denominator
    return nums, dens


class HomLieAlgebra:
    """(space, skewsymmetric bracket, twist endomorphism)."""

    __slots__ = ("dim", "alpha", "table", "_tn", "_td")

    def __init__(self, dim, table, alpha):
        if alpha.rows != dim or alpha.cols != dim:
            raise DimensionMismatch("twist must be a square matrix of the algebra dimension")
        table = [[vec(table[i][j]) for j in range(dim)] for i in range(dim)]
        for i in range(dim):
            if not vec_is_zero(table[i][i]):
                raise InvariantViolation(
                    f"structure constants not skewsymmetric: [e_{i+1}, e_{i+1}] != 0")
            for j in range(i + 1, dim):
                for k in range(dim):
                    if table[i][j][k] != -table[j][i][k]:
                        raise InvariantViolation(
                            "structure constants not skewsymmetric at "
                            f"(i, j, k) = ({i+1}, {j+1}, {k+1})")
        self.dim = dim
        self.alpha = alpha
        self.table = table
        self._tn, self._td = _flat_table(table, dim, dim)

    @classmethod
    def from_sparse(cls, dim, entries, alpha):
        """Build from {(i, j): coefficient vector} with 0-based i < j."""
        table = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in entries.items():
            v = vec(v)
            table[i][j] = v
            table[j][i] = [-x for x in v]
        return cls(dim, table, alpha)

    def bracket_basis(self, i, j):
        return list(self.table[i][j])

    def bracket(self, x, y):
        """Bracket of two coordinate vectors by bilinear expansion."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length != algebra dimension")
        x, y = vec(x), vec(y)
        xn = [f.numerator for f in x]
        xd = [f.denominator for f in x]
        yn = [f.numerator for f in y]
        yd = [f.denominator for f in y]
        on, od = K.bilinear_apply(self._tn, self._td, self.dim, self.dim, xn, xd, yn, yd)
        return [Fraction(n, d) for n, d in zip(on, od)]

    def bracket_matrix(self):
        """dim x dim^2 matrix whose column (i, j) is [e_i, e_j]."""
        n = self.dim
        cols = [self.table[i][j] for i in range(n) for j in range(n)]
        return Matrix.from_columns(cols, rows=n)

    def left_bracket_matrix(self, x):
        """Matrix of y -> [x, y] for a coordinate vector x."""
        n = self.dim
        acc = Matrix.zero(n, n)
        for p, c in enumerate(vec(x)):
            if c == 0:
                continue
            mp = Matrix.from_columns([self.table[p][q] for q in range(n)], rows=n)
            acc = acc + mp.scale(c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, HomLieAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.alpha == other.alpha
                and self.table == other.table)

    def __repr__(self):
        return f"HomLieAlgebra(dim={self.dim})"


class BilinearMap:
    """Arbitrary bilinear product (no symmetry assumed), optional twist."""

    __slots__ = ("dim", "table", "twist")

    def __init__(self, dim, table, twist=None):
        self.dim = dim
        self.table = [[vec(table[i][j]) for j in range(dim)] for i in range(dim)]
        if twist is not None and (twist.rows != dim or twist.cols != dim):
            raise DimensionMismatch("twist must be square of the map dimension")
        self.twist = twist

    @classmethod
    def from_homlie(cls, g):
        return cls(g.dim, g.table, g.alpha)

    @classmethod
    def from_sparse(cls, dim, entries, twist=None):
        table = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in entries.items():
            table[i][j] = vec(v)
        return cls(dim, table, twist)

    def apply_basis(self, i, j):
        return list(self.table[i][j])

    def apply(self, x, y):
        out = vec_zero(self.dim)
        for i, a in enumerate(vec(x)):
            if a == 0:
                continue
            for j, b in enumerate(vec(y)):
                if b == 0:
                    continue
                c = a * b
                row = self.table[i][j]
                out = [o + c * r for o, r in zip(out, row)]
        return out

    def is_skewsymmetric(self):
        for i in range(self.dim):
            if not vec_is_zero(self.table[i][i]):
                return False
            for j in range(i + 1, self.dim):
                if self.table[i][j] != [-x for x in self.table[j][i]]:
                    return False
        return True


@dataclass
class HomLieReport:
    is_endomorphism: bool
    hom_jacobi: bool
    endomorphism_witness: tuple | None = None
    jacobi_witness: tuple | None = None

    @property
    def ok(self):
        return self.is_endomorphism and self.hom_jacobi


def check_hom_lie(g):
    """Verify the twist is multiplicative and the twisted Jacobi identity.

    The Jacobi sweep runs over strictly increasing triples only: with a
    skewsymmetric bracket every triple with a repeated index vanishes
    identically (each cyclic summand cancels against another or is a
    bracket with a zero argument), so i < j < k is exhaustive.
    """
    n = g.dim
    alpha = g.alpha
    endo_ok, endo_wit = True, None
    alpha_cols = [alpha.column(i) for i in range(n)]
    for i in range(n):
        if not endo_ok:
            break
        for j in range(i + 1, n):
            lhs = alpha.apply(g.table[i][j])
            rhs = g.bracket(alpha_cols[i], alpha_cols[j])
            if lhs != rhs:
                endo_ok, endo_wit = False, (i + 1, j + 1)
                break
    jac_ok, jac_wit = True, None
    lbr = {i: g.left_bracket_matrix(alpha_cols[i]) for i in range(n)}
    for i, j, k in combinations(range(n), 3):
        total = lbr[i].apply(g.table[j][k])
        total = [a + b for a, b in zip(total, lbr[j].apply(g.table[k][i]))]
        total = [a + b for a, b in zip(total, lbr[k].apply(g.table[i][j]))]
        if not vec_is_zero(total):
            jac_ok, jac_wit = False, (i + 1, j + 1, k + 1)
            break
    return HomLieReport(endo_ok, jac_ok, endo_wit, jac_wit)


@dataclass
class LeibnizReport:
    holds: bool
    witness: tuple | None = None

    @property
    def ok(self):
        return self.holds


def check_hom_leibniz(b):
    """Twisted Leibniz rule on every basis triple, repeats included."""
    if b.twist is None:
        raise DimensionMismatch("a twist is required for the Leibniz check")
    n = b.dim
    tw = [b.twist.column(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = b.apply(tw[i], b.table[j][k])
                r1 = b.apply(b.table[i][j], tw[k])
                r2 = b.apply(tw[j], b.table[i][k])
                if lhs != [a + c for a, c in zip(r1, r2)]:
                    return LeibnizReport(False, (i + 1, j + 1, k + 1))
    return LeibnizReport(True)


def is_morphism(psi, g, h):
    """psi respects both brackets and intertwines the twists."""
    if psi.rows != h.dim or psi.cols != g.dim:
        raise DimensionMismatch(
            f"morphism matrix must be {h.dim}x{g.dim}, got {psi.rows}x{psi.cols}")
    if psi @ g.alpha != h.alpha @ psi:
        return False
    cols = [psi.column(i) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if psi.apply(g.table[i][j]) != h.bracket(cols[i], cols[j]):
                return False
    return True


def is_subalgebra(g, h):
    """The subspace is twist-invariant and closed under the bracket."""
    if h.ambient_dim != g.dim:
        raise DimensionMismatch("subspace ambient dimension != algebra dimension")
    for v in h.basis:
        if not h.contains(g.alpha.apply(v)):
            return False
    for a in h.basis:
        for b in h.basis:
            if not h.contains(g.bracket(a, b)):
                return False
    return True


def is_regular(g):
    """Axioms hold and the twist is invertible."""
    return check_hom_lie(g).ok and g.alpha.is_invertible()


# ---------------------------------------------------------------------------
# catalog of named test algebras

def abelian(n, alpha=None):
    """Zero bracket with an arbitrary twist (identity by default)."""
    if alpha is None:
        alpha = Matrix.identity(n)
    return HomLieAlgebra.from_sparse(n, {}, alpha)


def aff2(lam):
    """[e1, e2] = e2 with twist diag(1, lam)."""
    return HomLieAlgebra.from_sparse(
        2, {(0, 1): [0, 1]}, Matrix.diagonal([1, as_rational(lam)]))


def heis3(alpha=None):
    """[e1, e2] = e3; the twist must be compatible with the bracket."""
    if alpha is None:
        alpha = Matrix.identity(3)
    g = HomLieAlgebra.from_sparse(3, {(0, 1): [0, 0, 1]}, alpha)
    if not check_hom_lie(g).ok:
        raise InvariantViolation("the given twist is not an endomorphism of heis3")
    return g


def sl2():
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h in the basis (h, e, f), identity twist."""
    return HomLieAlgebra.from_sparse(
        3,
        {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
        Matrix.identity(3))


CATALOG = {
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "abelian4": lambda: abelian(4),
    "aff2_1": lambda: aff2(1),
    "aff2_2": lambda: aff2(2),
    "aff2_minus1": lambda: aff2(-1),
    "aff2_half": lambda: aff2(Fraction(1, 2)),
    "heis3": heis3,
    "heis3_twisted": lambda: heis3(Matrix.diagonal([2, 1, 2])),
    "sl2": sl2,
}
