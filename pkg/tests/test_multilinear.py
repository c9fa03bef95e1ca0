"""Alternating forms: evaluation, wedge, pullback, unshuffle action."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkit.errors import DimensionMismatch
from homkit.exactmath import Matrix, basis_vec
from homkit.multilinear import AltForm, increasing_tuples, unshuffles

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def rand_form(rng, degree, n, m=1):
    f = AltForm.zero(degree, n, m)
    f.coeffs = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m)]
                for _ in f.keys]
    return f


def perm_sign(perm):
    # parity by inversion count
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def test_eval_hand_cases():
    w = AltForm.eps(0, 2).wedge(AltForm.eps(1, 2))
    e1, e2 = basis_vec(0, 2), basis_vec(1, 2)
    assert w.eval([e1, e2]) == [Fraction(1)]
    assert w.eval([e2, e1]) == [Fraction(-1)]
    assert w.eval([[1, 1], e2]) == [Fraction(1)]


def test_eval_shape_errors():
    w = AltForm.eps(0, 2)
    with pytest.raises(DimensionMismatch):
        w.eval([[1, 0], [0, 1]])
    with pytest.raises(DimensionMismatch):
        w.eval([[1, 0, 0]])


def test_repeated_argument_vanishes():
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randint(2, 4)
        k = rng.randint(2, n)
        f = rand_form(rng, k, n, m=rng.choice([1, 2]))
        args = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
        args[rng.randrange(k - 1)] = args[-1]
        assert f.eval(args) == [Fraction(0)] * f.value_dim


def test_pullback_hand_cases():
    n = 2
    alpha = Matrix.diagonal([1, 2])
    assert AltForm.eps(1, n).pullback(Matrix.identity(2)) == AltForm.eps(1, n)
    assert AltForm.eps(1, n).pullback(alpha) == AltForm.eps(1, n).scale(2)
    w = AltForm.eps(0, n).wedge(AltForm.eps(1, n))
    assert w.pullback(alpha) == w.scale(2)


def test_pullback_functoriality_random():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(2, 4)
        k = rng.randint(1, n)
        f = rand_form(rng, k, n)
        alpha = Matrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        assert f.pullback(alpha).pullback(alpha) == f.pullback(alpha @ alpha)


def test_wedge_hand_cases():
    n = 2
    e0, e1 = AltForm.eps(0, n), AltForm.eps(1, n)
    assert e0.wedge(e0).is_zero()
    assert e0.wedge(e1).eval([basis_vec(0, n), basis_vec(1, n)]) == [Fraction(1)]
    assert e0.scale(2).wedge(e1.scale(3)) == e0.wedge(e1).scale(6)


def test_wedge_graded_commutative_and_associative():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(2, 4)
        k = rng.randint(0, 2)
        l = rng.randint(0, n - k) if n - k else 0
        xi = rand_form(rng, k, n)
        eta = rand_form(rng, l, n)
        assert xi.wedge(eta) == eta.wedge(xi).scale((-1) ** (k * l))
        j = rng.randint(0, max(0, n - k - l))
        om = rand_form(rng, j, n)
        assert xi.wedge(eta).wedge(om) == xi.wedge(eta.wedge(om))


def test_diamond_hand_cases():
    # degree-0 scalar acts by scaling
    n = 3
    phi = rand_form(random.Random(3), 1, n, m=2)
    c = AltForm.constant([Fraction(5)], n)
    assert c.diamond(phi) == phi.scale(5)
    # scalar values: coincides with the wedge
    e0, e1 = AltForm.eps(0, n), AltForm.eps(1, n)
    assert e0.diamond(e1) == e0.wedge(e1)
    # two unshuffles on a vector-valued factor
    u = [Fraction(2), Fraction(-1)]
    phi = AltForm.monomial((1,), n, u)
    out = e0.diamond(phi)
    assert out.eval([basis_vec(0, n), basis_vec(1, n)]) == u
    assert out.eval([basis_vec(1, n), basis_vec(0, n)]) == [-x for x in u]


def test_diamond_against_full_permutation_oracle():
    # sum over all permutations with signs, divided by l! k!
    rng = random.Random(4)
    for _ in range(12):
        n = rng.randint(2, 4)
        l = rng.randint(1, min(2, n - 1))
        k = rng.randint(1, min(2, n - l))
        eta = rand_form(rng, l, n)
        phi = rand_form(rng, k, n, m=2)
        out = eta.diamond(phi)
        args = [[Fraction(rng.randint(-2, 2)) for _ in range(n)]
                for _ in range(k + l)]
        total = [Fraction(0)] * 2
        for perm in permutations(range(k + l)):
            sign = perm_sign(perm)
            a = eta.eval([args[p] for p in perm[:l]])[0]
            if a == 0:
                continue
            b = phi.eval([args[p] for p in perm[l:]])
            total = [t + sign * a * x for t, x in zip(total, b)]
        import math
        scale = Fraction(1, math.factorial(l) * math.factorial(k))
        assert out.eval(args) == [scale * t for t in total]


def test_diamond_associates_with_wedge():
    # (eta ^ omega) . phi = eta . (omega . phi)
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(3, 4)
        eta = rand_form(rng, 1, n)
        om = rand_form(rng, 1, n)
        phi = rand_form(rng, rng.randint(0, n - 2), n, m=2)
        assert eta.wedge(om).diamond(phi) == eta.diamond(om.diamond(phi))


def test_unshuffle_signs_against_sort_parity():
    for total in range(1, 5):
        for first_len in range(total + 1):
            for first, rest, sign in unshuffles(total, first_len):
                assert sign == perm_sign(first + rest)


def test_degree_above_dimension_is_zero_form():
    f = AltForm.zero(3, 2, 1)
    assert f.keys == []
    assert f.is_zero()
    w = AltForm.eps(0, 2).wedge(AltForm.eps(1, 2))
    top = w.wedge(AltForm.eps(0, 2))
    assert top.degree == 3 and top.is_zero()


@given(a=rationals, b=rationals)
@settings(max_examples=30, deadline=None)
def test_eval_linear_in_coefficients(a, b):
    n = 3
    f1 = AltForm.monomial((0, 1), n)
    f2 = AltForm.monomial((1, 2), n)
    combo = f1.scale(a) + f2.scale(b)
    args = [[1, 2, 3], [0, 1, 1]]
    lhs = combo.eval(args)[0]
    rhs = a * f1.eval(args)[0] + b * f2.eval(args)[0]
    assert lhs == rhs
