"""Representations, the twisted gl(V) algebra, and the coboundary family.

For an invertible beta the bracket
    [A, B]_beta = beta A beta^-1 B beta^-1 - beta B beta^-1 A beta^-1
with twist Ad_beta(A) = beta A beta^-1 makes gl(V) a regular twisted
algebra (basis E_ij in row-major order); a representation is exactly a
morphism into it.

Cochains with values in the module carry the compatibility constraint
phi(alpha x_1, ..., alpha x_k) = beta . phi(x_1, ..., x_k).  On such a
cochain of degree k the s-indexed coboundary operator acts by

    (d^s phi)(x_1, ..., x_{k+1}) =
        sum_i (-1)^{i+1} rho(alpha^{s+k}(x_i)) phi(..., ^i, ...)
      + sum_{i<j} (-1)^{i+j} phi([x_i, x_j], alpha(x_1), ..., ^i, ..., ^j, ...)

with the exponent s + (input degree); the degree is always passed
explicitly, never inferred.  On 0-cochains the argument pullback is the
identity (empty product), so the compatible subspace is ker(beta - id).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dgca import differential
from .errors import (DimensionMismatch, NotARepresentation, NotHomCochain,
                     NotRegular, SingularMatrix)
from .exactmath import Matrix, nullspace, vec_add, vec_scale, vec_zero
from .homlie import HomLieAlgebra, check_hom_lie, is_morphism, is_regular
from .multilinear import AltForm, increasing_tuples


class Representation:
    """(algebra, module dimension, rho matrices per basis element, beta)."""

    __slots__ = ("g", "v_dim", "rho", "beta", "_alpha_powers")

    def __init__(self, g, v_dim, rho, beta):
        if len(rho) != g.dim:
            raise DimensionMismatch("need one rho matrix per basis element")
        for r in rho:
            if r.rows != v_dim or r.cols != v_dim:
                raise DimensionMismatch("rho matrices must be v_dim x v_dim")
        if beta.rows != v_dim or beta.cols != v_dim:
            raise DimensionMismatch("beta must be v_dim x v_dim")
        self.g = g
        self.v_dim = v_dim
        self.rho = list(rho)
        self.beta = beta
        self._alpha_powers = {0: Matrix.identity(g.dim), 1: g.alpha}

    def alpha_power(self, p):
        if p not in self._alpha_powers:
            self._alpha_powers[p] = self.alpha_power(p - 1) @ self.g.alpha
        return self._alpha_powers[p]

    def rho_of(self, v):
        """rho extended linearly to a coordinate vector."""
        acc = Matrix.zero(self.v_dim, self.v_dim)
        for l, c in enumerate(v):
            if c != 0:
                acc = acc + self.rho[l].scale(c)
        return acc


def trivial_rep(g, v_dim=1, beta=None):
    """rho = 0 with an arbitrary beta (identity by default)."""
    if beta is None:
        beta = Matrix.identity(v_dim)
    return Representation(g, v_dim, [Matrix.zero(v_dim, v_dim)] * g.dim, beta)


def glv_hom_lie(beta, certify=True):
    """The twisted algebra on gl(V) defined by an invertible beta.

    Structure constants are taken in the row-major E_ij basis; the twist
    is the matrix of A -> beta A beta^-1 in that basis.
    """
    m = beta.rows
    if beta.cols != m:
        raise DimensionMismatch("beta must be square")
    beta_inv = beta.inverse()  # raises SingularMatrix when rank < m
    n = m * m

    def unit(a):
        e = Matrix.zero(m, m)
        e.nums[a] = 1
        return e

    units = [unit(a) for a in range(n)]
    conj = [beta @ e @ beta_inv for e in units]  # Ad_beta(E_a)
    entries = {}
    for a in range(n):
        for b in range(a + 1, n):
            lhs = conj[a] @ units[b] @ beta_inv - conj[b] @ units[a] @ beta_inv
            entries[(a, b)] = [lhs[i, j] for i in range(m) for j in range(m)]
    twist = Matrix.from_columns(
        [[c[i, j] for i in range(m) for j in range(m)] for c in conj], rows=n)
    g = HomLieAlgebra.from_sparse(n, entries, twist)
    if certify and not (check_hom_lie(g).ok and g.alpha.is_invertible()):
        raise NotRegular("twisted gl(V) failed certification")  # unreachable
    return g


@dataclass
class RepReport:
    intertwines: bool
    cocycle: bool
    intertwine_witness: tuple | None = None
    cocycle_witness: tuple | None = None

    @property
    def ok(self):
        return self.intertwines and self.cocycle


def check_representation(r):
    """Both defining identities, verified on basis elements and pairs."""
    g, beta = r.g, r.beta
    inter_ok, inter_wit = True, None
    for i in range(g.dim):
        lhs = r.rho_of(g.alpha.column(i)) @ beta
        if lhs != beta @ r.rho[i]:
            inter_ok, inter_wit = False, (i + 1,)
            break
    coc_ok, coc_wit = True, None
    for i in range(g.dim):
        if not coc_ok:
            break
        rho_ai = r.rho_of(g.alpha.column(i))
        for j in range(i + 1, g.dim):
            lhs = r.rho_of(g.table[i][j]) @ beta
            rhs = rho_ai @ r.rho[j] - r.rho_of(g.alpha.column(j)) @ r.rho[i]
            if lhs != rhs:
                coc_ok, coc_wit = False, (i + 1, j + 1)
                break
    return RepReport(inter_ok, coc_ok, inter_wit, coc_wit)


@dataclass
class RepMorphismReport:
    is_rep: bool
    is_morphism: bool

    @property
    def agree(self):
        return self.is_rep == self.is_morphism

    @property
    def ok(self):
        return self.agree


def rep_iff_morphism(r):
    """Compare the representation identities with morphism-ness into gl(V)."""
    glv = glv_hom_lie(r.beta, certify=False)
    psi = Matrix.from_columns(
        [[mat[i, j] for i in range(r.v_dim) for j in range(r.v_dim)]
         for mat in r.rho],
        rows=r.v_dim * r.v_dim)
    return RepMorphismReport(check_representation(r).ok, is_morphism(psi, r.g, glv))


def adjoint_rep(g):
    """ad_x y = [x, y] on the algebra itself, with beta = alpha."""
    if not is_regular(g):
        raise NotRegular("the adjoint construction needs a regular algebra")
    rho = [Matrix.from_columns([g.table[i][j] for j in range(g.dim)], rows=g.dim)
           for i in range(g.dim)]
    r = Representation(g, g.dim, rho, g.alpha)
    if not check_representation(r).ok:
        raise NotARepresentation("adjoint data failed certification")  # unreachable
    return r


# ---------------------------------------------------------------------------
# cochain spaces

def _form_to_coords(form):
    out = []
    for c in form.coeffs:
        out.extend(c)
    return out


def _coords_to_form(coords, degree, n, m):
    count = len(increasing_tuples(n, degree))
    return AltForm(degree, n, m,
                   [coords[i * m:(i + 1) * m] for i in range(count)])


def _cochain_basis(n, k, m):
    basis = []
    for key in increasing_tuples(n, k):
        for t in range(m):
            value = vec_zero(m)
            value[t] = Fraction(1)
            basis.append(AltForm.monomial(key, n, value))
    return basis


def is_hom_cochain(r, form):
    """Compatibility: argument pullback along alpha equals beta on values."""
    return form.pullback(r.g.alpha) == form.map_values(r.beta)


class HomCochain:
    """A module-valued alternating form satisfying the compatibility invariant."""

    __slots__ = ("rep", "form")

    def __init__(self, rep, form):
        if form.source_dim != rep.g.dim or form.value_dim != rep.v_dim:
            raise DimensionMismatch("cochain shape does not match the representation")
        if not is_hom_cochain(rep, form):
            raise NotHomCochain("form is not compatible with the two twists")
        self.rep = rep
        self.form = form

    @property
    def degree(self):
        return self.form.degree


def hom_cochain_space(r, k):
    """Deterministic basis of the twist-compatible k-cochains.

    Computed as the nullspace of (argument pullback - value twist) on the
    full cochain coefficient space.
    """
    n, m = r.g.dim, r.v_dim
    basis = _cochain_basis(n, k, m)
    if not basis:
        return []
    cols = []
    for phi in basis:
        image = phi.pullback(r.g.alpha) - phi.map_values(r.beta)
        cols.append(_form_to_coords(image))
    op = Matrix.from_columns(cols)
    return [HomCochain(r, _coords_to_form(v, k, n, m))
            for v in nullspace(op).basis]


def scalar_invariant_forms(g, l):
    """Basis of the scalar l-forms fixed by the pullback along the twist."""
    keys = increasing_tuples(g.dim, l)
    if not keys:
        return []
    cols = []
    for key in keys:
        mono = AltForm.monomial(key, g.dim)
        image = mono.pullback(g.alpha) - mono
        cols.append([c[0] for c in image.coeffs])
    op = Matrix.from_columns(cols)
    return [_coords_to_form(v, l, g.dim, 1) for v in nullspace(op).basis]


def ds(r, s, phi):
    """Coboundary operator of index s >= 0 on a compatible cochain.

    Accepts a HomCochain or a raw AltForm (validated); the output is
    re-verified against the compatibility invariant before returning.
    """
    if s < 0:
        raise DimensionMismatch("the operator family index must be >= 0")
    form = phi.form if isinstance(phi, HomCochain) else phi
    if not isinstance(phi, HomCochain):
        if form.source_dim != r.g.dim or form.value_dim != r.v_dim:
            raise DimensionMismatch("cochain shape does not match the representation")
        if not is_hom_cochain(r, form):
            raise NotHomCochain("form is not compatible with the two twists")
    g, n, m, k = r.g, r.g.dim, r.v_dim, form.degree
    out = AltForm.zero(k + 1, n, m)
    if k + 1 <= n:
        apow = r.alpha_power(s + k)
        rho_tw = [r.rho_of(apow.column(i)) for i in range(n)]
        alpha_cols = [g.alpha.column(i) for i in range(n)]
        for idx, key in enumerate(out.keys):
            total = vec_zero(m)
            for p in range(k + 1):
                rest = tuple(key[q] for q in range(k + 1) if q != p)
                value = form.coeff(rest)
                term = rho_tw[key[p]].apply(value)
                total = vec_add(total, vec_scale(Fraction((-1) ** p), term))
            for p, q in combinations(range(k + 1), 2):
                bracket = g.table[key[p]][key[q]]
                rest = [alpha_cols[key[t]] for t in range(k + 1) if t != p and t != q]
                term = form.eval([bracket] + rest)
                total = vec_add(total, vec_scale(Fraction((-1) ** (p + q)), term))
            out.coeffs[idx] = total
    return HomCochain(r, out)  # constructor re-verifies the invariant


@dataclass
class DsReport:
    squares_to_zero: bool
    beta_compatible: bool
    action_derivation: bool
    witness: tuple | None = None

    @property
    def ok(self):
        return (self.squares_to_zero and self.beta_compatible
                and self.action_derivation)


def check_ds_properties(r, s_max, k_max):
    """The three operator-family properties on full compatible bases.

    (i) each d^s squares to zero, (ii) the value twist shifts the index
    by one, (iii) the unshuffle action is a graded derivation with the
    index shifted by the scalar degree.  Properties quantified over the
    compatible cochains are checked on the computed bases (sufficient by
    linearity).
    """
    n = r.g.dim
    sq_ok = beta_ok = act_ok = True
    witness = None
    bases = {k: hom_cochain_space(r, k) for k in range(min(k_max, n) + 1)}
    for s in range(s_max + 1):
        for k, basis in bases.items():
            for pos, phi in enumerate(basis):
                # a NotHomCochain here means the operator is not even
                # well-defined on the compatible subcomplex (the data is
                # not a representation): the property chain fails
                try:
                    img = ds(r, s, phi)
                    if sq_ok and not ds(r, s, img).form.is_zero():
                        sq_ok = False
                        witness = witness or ("squares_to_zero", (s, k, pos))
                except NotHomCochain:
                    sq_ok = False
                    witness = witness or ("squares_to_zero_not_well_defined",
                                          (s, k, pos))
                    continue
                try:
                    lhs = img.form.map_values(r.beta)
                    rhs = ds(r, s + 1, phi.form.map_values(r.beta)).form
                    if beta_ok and lhs != rhs:
                        beta_ok = False
                        witness = witness or ("beta_compatible", (s, k, pos))
                except NotHomCochain:
                    beta_ok = False
                    witness = witness or ("beta_compatible_not_well_defined",
                                          (s, k, pos))
    for s in range(s_max + 1):
        for k, basis in bases.items():
            for l in range(n - k + 1):
                etas = scalar_invariant_forms(r.g, l)
                for ei, eta in enumerate(etas):
                    d_eta = differential(r.g, eta)
                    for pos, phi in enumerate(basis):
                        try:
                            lhs = ds(r, s, eta.diamond(phi.form)).form
                            rhs = d_eta.diamond(phi.form.pullback(r.g.alpha))
                            rhs = rhs + eta.diamond(ds(r, s + l, phi).form).scale(
                                (-1) ** l)
                            bad = lhs != rhs
                        except NotHomCochain:
                            bad = True
                        if bad:
                            act_ok = False
                            witness = witness or ("action_derivation", (s, k, l, ei, pos))
    return DsReport(sq_ok, beta_ok, act_ok, witness)


def cohomology_dim(r, s, k):
    """dim ker(d^s on compatible k-cochains) - dim im from degree k-1."""
    if not check_representation(r).ok:
        raise NotARepresentation("cohomology needs a genuine representation")
    n, m = r.g.dim, r.v_dim

    def operator_rank_and_nullity(degree):
        basis = hom_cochain_space(r, degree)
        if not basis:
            return 0, 0
        cols = [_form_to_coords(ds(r, s, phi).form) for phi in basis]
        op = Matrix.from_columns(cols)
        rank = op.rank()
        return rank, len(basis) - rank

    _, nullity = operator_rank_and_nullity(k)
    if k == 0:
        return nullity
    rank_below, _ = operator_rank_and_nullity(k - 1)
    return nullity - rank_below
