"""Degree-1 differential on the exterior algebra of the dual space.

For an algebra g with bracket [.,.] and twist alpha the operator acts on
a k-form xi by

    (d xi)(x_1, ..., x_{k+1}) =
        sum_{i<j} (-1)^{i+j} xi([x_i, x_j], alpha(x_1), ..., ^i, ..., ^j, ...)

(hats mark omitted arguments, all surviving arguments are twisted).
The operator is built degree by degree straight from this formula, so
the graded Leibniz rule is a genuine verified property rather than a
construction artifact.

``bracket_from_differential`` inverts the construction: the bracket is
read off degree-1 images via <eta, [x, y]> = -(d eta)(x, y), while the
twist is taken as explicit input data (the commutation relation between
the differential and a pullback does not pin the twist down in
degenerate cases, e.g. for a zero bracket).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch
from .exactmath import Matrix, vec_zero
from .homlie import HomLieAlgebra
from .multilinear import AltForm, increasing_tuples


def differential(g, f):
    """Apply the degree-raising operator of g to a scalar-valued form."""
    if f.source_dim != g.dim:
        raise DimensionMismatch("form source dimension != algebra dimension")
    if f.value_dim != 1:
        raise DimensionMismatch("the differential acts on scalar-valued forms")
    n = g.dim
    k = f.degree
    out = AltForm.zero(k + 1, n, 1)
    if k + 1 > n:
        return out
    alpha_cols = [g.alpha.column(i) for i in range(n)]
    for idx, key in enumerate(out.keys):
        total = Fraction(0)
        for a, b in combinations(range(k + 1), 2):
            bracket = g.table[key[a]][key[b]]
            rest = [alpha_cols[key[p]] for p in range(k + 1) if p != a and p != b]
            val = f.eval([bracket] + rest)
            # (-1)^{i+j} for 1-based positions i = a+1, j = b+1
            sign = (-1) ** (a + b)
            total += sign * val[0]
        out.coeffs[idx] = [total]
    return out


@dataclass
class DgcaReport:
    d_squared_zero: bool
    commutes_with_pullback: bool
    graded_leibniz: bool
    witness: tuple | None = None

    @property
    def ok(self):
        return (self.d_squared_zero and self.commutes_with_pullback
                and self.graded_leibniz)


def check_dgca(g):
    """Verify the three differential-graded axioms on all basis monomials.

    (1) the operator squares to zero in every degree, (2) it commutes
    with the pullback along the twist, (3) the graded Leibniz rule holds
    on every pair of basis monomials with degree sum <= dim.  Witnesses
    name the first failing monomial (or pair) by its 1-based index tuple.
    """
    n = g.dim
    sq_ok, comm_ok, leib_ok = True, True, True
    witness = None
    basis = {
        k: [AltForm.monomial(key, n) for key in increasing_tuples(n, k)]
        for k in range(n + 1)
    }
    for k in range(n + 1):
        for key, mono in zip(increasing_tuples(n, k), basis[k]):
            dm = differential(g, mono)
            if sq_ok and not differential(g, dm).is_zero():
                sq_ok = False
                witness = witness or ("d_squared_zero", tuple(i + 1 for i in key))
            if comm_ok and dm.pullback(g.alpha) != differential(g, mono.pullback(g.alpha)):
                comm_ok = False
                witness = witness or ("commutes_with_pullback",
                                      tuple(i + 1 for i in key))
    for k in range(n + 1):
        if not leib_ok:
            break
        for l in range(n - k + 1):
            if not leib_ok:
                break
            for ikey in increasing_tuples(n, k):
                if not leib_ok:
                    break
                xi = AltForm.monomial(ikey, n)
                dxi = differential(g, xi)
                xi_a = xi.pullback(g.alpha)
                for jkey in increasing_tuples(n, l):
                    eta = AltForm.monomial(jkey, n)
                    lhs = differential(g, xi.wedge(eta))
                    rhs = dxi.wedge(eta.pullback(g.alpha))
                    rhs = rhs + xi_a.wedge(differential(g, eta)).scale((-1) ** k)
                    if lhs != rhs:
                        leib_ok = False
                        witness = witness or (
                            "graded_leibniz",
                            (tuple(i + 1 for i in ikey), tuple(j + 1 for j in jkey)))
                        break
    return DgcaReport(sq_ok, comm_ok, leib_ok, witness)


@dataclass
class DgcaData:
    """Differential sampled on generators plus the two twist maps."""

    source_dim: int
    sigma: Matrix
    tau: Matrix
    d1: Matrix  # C(n,2) x n, column j = coefficients of d eps_j

    @classmethod
    def from_algebra(cls, g):
        n = g.dim
        cols = []
        for j in range(n):
            form = differential(g, AltForm.eps(j, n))
            cols.append([form.scalar_coeff(key) for key in form.keys])
        pair_count = len(increasing_tuples(n, 2))
        return cls(n, g.alpha, g.alpha, Matrix.from_columns(cols, rows=pair_count))


def bracket_from_differential(dd):
    """Recover the algebra whose differential has the given generator images.

    c[i][j][k] = -(d eps_k)(e_i, e_j); the twist is dd.sigma.  The caller
    certifies the result (run check_hom_lie) -- construction itself
    always succeeds.
    """
    n = dd.source_dim
    pair_index = {key: r for r, key in enumerate(increasing_tuples(n, 2))}
    entries = {}
    for i, j in combinations(range(n), 2):
        row = pair_index[(i, j)]
        entries[(i, j)] = [-dd.d1[row, k] for k in range(n)]
    return HomLieAlgebra.from_sparse(n, entries, dd.sigma)


@dataclass
class DerivationReport:
    holds: bool
    witness: tuple | None = None

    @property
    def ok(self):
        return self.holds


def check_sigma_tau_derivation(d_op, sigma, tau, dim):
    """Is the degree-1 operator a twisted graded derivation for (sigma, tau)?

    ``d_op`` is the operator itself (a callable on scalar forms; for an
    algebra g pass ``lambda f: differential(g, f)``).  The twist
    matrices act on the underlying space and are applied to forms by
    pullback.  The rule

        d(a b) = d(a) tau*(b) + (-1)^{|a|} sigma*(a) d(b)

    is verified on every ordered pair of basis monomials with degree sum
    <= dim; the first failing pair is the witness.  Note extending a
    generator-sampled operator *by* this rule always satisfies it (the
    exterior algebra is free), so the check is only informative for an
    independently defined operator such as the bracket differential.
    """
    n = dim
    if sigma.rows != n or sigma.cols != n or tau.rows != n or tau.cols != n:
        raise DimensionMismatch("twist matrices must be n x n")

    def apply(form):
        out = d_op(form)
        if out.degree != form.degree + 1 or out.source_dim != n:
            raise DimensionMismatch("operator must raise degree by one")
        return out

    for k in range(n + 1):
        for l in range(n - k + 1):
            for ikey in increasing_tuples(n, k):
                a = AltForm.monomial(ikey, n)
                da = apply(a)
                sa = a.pullback(sigma)
                for jkey in increasing_tuples(n, l):
                    b = AltForm.monomial(jkey, n)
                    lhs = apply(a.wedge(b))
                    rhs = da.wedge(b.pullback(tau)) + sa.wedge(apply(b)).scale((-1) ** k)
                    if lhs != rhs:
                        return DerivationReport(
                            False,
                            (tuple(i + 1 for i in ikey), tuple(j + 1 for j in jkey)))
    return DerivationReport(True)
