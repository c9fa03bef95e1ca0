"""Twisted gl(V), representation checks, coboundary family, cohomology."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from homkit.errors import NotHomCochain, NotRegular, SingularMatrix
from homkit.exactmath import Matrix, basis_vec, vec_add, vec_scale, vec_zero
from homkit.homlie import abelian, aff2, check_hom_lie, heis3, is_regular, sl2
from homkit.multilinear import AltForm, increasing_tuples
from homkit.rep import (HomCochain, Representation, adjoint_rep,
                        check_ds_properties, check_representation,
                        cohomology_dim, ds, glv_hom_lie, hom_cochain_space,
                        is_hom_cochain, rep_iff_morphism, scalar_invariant_forms,
                        trivial_rep)


def unit(i, j, m):
    e = Matrix.zero(m, m)
    e.nums[i * m + j] = 1
    return e


def brute_force_ds(r, s, form):
    """Independent oracle: evaluate the coboundary formula term by term
    with explicit argument lists and no stored-coefficient shortcuts."""
    g, n, m, k = r.g, r.g.dim, r.v_dim, form.degree
    apow = r.alpha_power(s + k)
    out = AltForm.zero(k + 1, n, m)
    for idx, key in enumerate(out.keys):
        args = [basis_vec(i, n) for i in key]
        total = vec_zero(m)
        for i in range(k + 1):
            rest = args[:i] + args[i + 1:]
            coeff = r.rho_of(apow.apply(args[i])).apply(form.eval(rest))
            total = vec_add(total, vec_scale(Fraction((-1) ** i), coeff))
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                first = g.bracket(args[i], args[j])
                rest = [g.alpha.apply(args[t]) for t in range(k + 1)
                        if t != i and t != j]
                coeff = form.eval([first] + rest)
                total = vec_add(total, vec_scale(Fraction((-1) ** (i + j)), coeff))
        out.coeffs[idx] = total
    return out


def rand_invertible(rng, m, span=2):
    while True:
        mat = Matrix.from_rows([[rng.randint(-span, span) for _ in range(m)]
                                for _ in range(m)])
        if mat.is_invertible():
            return mat


def test_glv_structure_constants_hand_cases():
    glv = glv_hom_lie(Matrix.diagonal([1, 2]))
    # basis order E11, E12, E21, E22
    assert glv.bracket_basis(0, 1) == [0, Fraction(1, 2), 0, 0]
    assert glv.bracket_basis(1, 2) == [Fraction(1, 2), 0, 0, Fraction(-1)]
    # identity twist degenerates to the plain commutator
    comm = glv_hom_lie(Matrix.identity(2))
    assert comm.alpha.is_identity()
    for a, b in combinations(range(4), 2):
        ea, eb = unit(a // 2, a % 2, 2), unit(b // 2, b % 2, 2)
        direct = ea @ eb - eb @ ea
        assert comm.bracket_basis(a, b) == [direct[i, j] for i in range(2)
                                            for j in range(2)]


def test_glv_is_regular_for_random_invertible_beta():
    rng = random.Random(31)
    for _ in range(20):
        m = rng.randint(1, 3)
        beta = rand_invertible(rng, m)
        glv = glv_hom_lie(beta)
        assert check_hom_lie(glv).ok
        assert is_regular(glv)


def test_glv_requires_invertible_beta():
    with pytest.raises(SingularMatrix):
        glv_hom_lie(Matrix.from_rows([[1, 2], [2, 4]]))


def test_check_representation_hand_cases():
    g = aff2(2)
    assert check_representation(trivial_rep(g, 3)).ok
    assert check_representation(adjoint_rep(g)).ok
    bad = Representation(g, 2, [Matrix.identity(2), unit(0, 1, 2)],
                         Matrix.identity(2))
    rep = check_representation(bad)
    assert not rep.cocycle


def test_rep_iff_morphism_on_100_random_candidates():
    rng = random.Random(37)
    algebras = [aff2(2), aff2(-1), heis3(), sl2(), abelian(3)]
    disagreements = 0
    positives = 0
    for trial in range(100):
        g = algebras[trial % len(algebras)]
        m = rng.randint(1, 3)
        beta = rand_invertible(rng, m)
        if trial % 10 == 0 and is_regular(g) and g.dim <= 3:
            r = adjoint_rep(g)  # guaranteed positive instances
        elif trial % 10 == 5:
            r = trivial_rep(g, m, Matrix.identity(m))
        else:
            rho = [Matrix.from_rows([[rng.randint(-2, 2) for _ in range(m)]
                                     for _ in range(m)]) for _ in range(g.dim)]
            r = Representation(g, m, rho, beta)
        report = rep_iff_morphism(r)
        disagreements += not report.agree
        positives += report.is_rep
    assert disagreements == 0
    assert positives >= 10


def test_adjoint_rep_hand_cases():
    g = aff2(2)
    r = adjoint_rep(g)
    assert r.rho[0] == unit(1, 1, 2)            # ad e1 = E22
    assert r.rho[1] == unit(1, 0, 2).scale(-1)  # ad e2 = -E21
    assert r.beta == g.alpha
    assert adjoint_rep(abelian(3)).rho == [Matrix.zero(3, 3)] * 3
    h = adjoint_rep(heis3())
    assert check_representation(h).ok
    assert h.rho[0].apply(basis_vec(1, 3)) == basis_vec(2, 3)  # [e1,e2] = e3
    with pytest.raises(NotRegular):
        adjoint_rep(aff2(0))


def test_hom_cochain_space_dimensions():
    g = aff2(2)
    # identity value twist fixes all of V in degree 0
    assert len(hom_cochain_space(trivial_rep(g, 3), 0)) == 3
    # adjoint with beta = diag(1, 2): degree-1 compatibles commute with it
    ar = adjoint_rep(g)
    space = hom_cochain_space(ar, 1)
    assert len(space) == 2
    # trivial scalar module: only the first covector survives in degree 1
    tr = trivial_rep(g, 1)
    space = hom_cochain_space(tr, 1)
    assert len(space) == 1
    assert space[0].form == AltForm.eps(0, 2)
    # degree 2 is filtered out entirely (pullback eigenvalue 2 != 1)
    assert hom_cochain_space(tr, 2) == []


def test_hom_cochain_invariant_enforced():
    g = aff2(2)
    ar = adjoint_rep(g)
    with pytest.raises(NotHomCochain):
        HomCochain(ar, AltForm.monomial((1,), 2, [1, 0]))
    with pytest.raises(NotHomCochain):
        ds(ar, 0, AltForm.monomial((1,), 2, [1, 0]))


def test_ds_degree_zero_is_twisted_action():
    g = aff2(2)
    ar = adjoint_rep(g)
    # beta = diag(1,2): compatible 0-cochains are ker(beta - id) = span{e1}
    space = hom_cochain_space(ar, 0)
    assert len(space) == 1 and space[0].form.coeffs == [[1, 0]]
    v = space[0]
    for s in range(3):
        img = ds(ar, s, v)
        apow = ar.alpha_power(s)
        for i in range(2):
            expected = ar.rho_of(apow.column(i)).apply(v.form.coeffs[0])
            assert img.form.coeff((i,)) == expected


def test_ds_identity_cochain_fixed_value():
    # the identity 1-cochain is compatible for the adjoint of aff2(2);
    # the oracle fixes d^0 phi (e1, e2) = 2 e2
    ar = adjoint_rep(aff2(2))
    phi = AltForm(1, 2, 2, [[1, 0], [0, 1]])
    assert is_hom_cochain(ar, phi)
    oracle = brute_force_ds(ar, 0, phi)
    assert oracle.coeff((0, 1)) == [Fraction(0), Fraction(2)]
    assert ds(ar, 0, phi).form == oracle


def test_ds_matches_brute_force_oracle():
    rng = random.Random(41)
    reps = [adjoint_rep(aff2(2)), adjoint_rep(heis3()),
            trivial_rep(sl2(), 2), adjoint_rep(aff2(Fraction(1, 2)))]
    for r in reps:
        for k in range(0, 3):
            for s in range(0, 3):
                for phi in hom_cochain_space(r, k):
                    assert ds(r, s, phi).form == brute_force_ds(r, s, phi.form)


def test_ds_trivial_rep_reduces_to_scalar_differential():
    from homkit.dgca import differential
    g = heis3(Matrix.diagonal([2, 1, 2]))
    r = trivial_rep(g, 1)
    for k in range(3):
        for phi in hom_cochain_space(r, k):
            scalar = AltForm(k, 3, 1, phi.form.coeffs)
            expected = differential(g, scalar)
            assert ds(r, 0, phi).form.coeffs == expected.coeffs


def test_ds_well_defined_on_hom_cochains():
    for r in (adjoint_rep(aff2(2)), adjoint_rep(heis3()), trivial_rep(aff2(2), 2)):
        for k in range(3):
            for s in range(4):
                for phi in hom_cochain_space(r, k):
                    out = ds(r, s, phi)  # constructor re-checks the invariant
                    assert is_hom_cochain(r, out.form)


def test_check_ds_properties_positive():
    assert check_ds_properties(adjoint_rep(aff2(2)), 2, 2).ok
    assert check_ds_properties(adjoint_rep(heis3()), 2, 2).ok
    assert check_ds_properties(trivial_rep(sl2(), 1), 1, 2).ok


def test_check_ds_properties_detects_non_representation():
    g = aff2(2)
    bad = Representation(g, 2, [Matrix.identity(2), unit(0, 1, 2)],
                         Matrix.identity(2))
    assert not check_representation(bad).ok
    report = check_ds_properties(bad, 1, 1)
    assert not report.squares_to_zero
    assert report.witness is not None


def test_scalar_invariant_forms():
    g = aff2(2)
    forms = scalar_invariant_forms(g, 1)
    assert [f.coeffs for f in forms] == [[[1], [0]]]
    assert scalar_invariant_forms(g, 2) == []
    assert len(scalar_invariant_forms(abelian(3), 2)) == 3


def test_cohomology_dimensions():
    for n in range(1, 5):
        r = trivial_rep(abelian(n), 1)
        for k in range(n + 1):
            expected = len(increasing_tuples(n, k))
            assert cohomology_dim(r, 0, k) == expected
    tr = trivial_rep(aff2(2), 1)
    for s in range(3):
        assert [cohomology_dim(tr, s, k) for k in range(3)] == [1, 1, 0]


def test_cohomology_requires_representation():
    from homkit.errors import NotARepresentation
    g = aff2(2)
    bad = Representation(g, 2, [Matrix.identity(2), unit(0, 1, 2)],
                         Matrix.identity(2))
    with pytest.raises(NotARepresentation):
        cohomology_dim(bad, 0, 1)
