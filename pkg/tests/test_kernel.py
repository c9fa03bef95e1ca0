"""Backend equivalence and kernel correctness against Fraction oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homkit import _kernel as selected
from homkit._kernel import _pykernel as pk

try:
    from homkit._kernel import _cykernel as ck
    BACKENDS = [pk, ck]
except ImportError:
    BACKENDS = [pk]

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12)


def to_kernel(fracs):
    return [f.numerator for f in fracs], [f.denominator for f in fracs]


def to_fracs(nums, dens):
    return [Fraction(n, d) for n, d in zip(nums, dens)]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
class TestAgainstFractionOracle:
    @given(a=st.lists(rationals, min_size=4, max_size=4),
           b=st.lists(rationals, min_size=4, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_mat_mul_2x2(self, backend, a, b):
        an, ad = to_kernel(a)
        bn, bd = to_kernel(b)
        cn, cd = backend.mat_mul(an, ad, bn, bd, 2, 2, 2)
        expected = [a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]]
        assert to_fracs(cn, cd) == expected
        # entries come back canonical
        for n, d in zip(cn, cd):
            f = Fraction(n, d)
            assert (f.numerator, f.denominator) == (n, d)

    @given(a=st.lists(rationals, min_size=6, max_size=6),
           b=st.lists(rationals, min_size=6, max_size=6))
    @settings(max_examples=40, deadline=None)
    def test_elementwise(self, backend, a, b):
        an, ad = to_kernel(a)
        bn, bd = to_kernel(b)
        assert to_fracs(*backend.mat_add(an, ad, bn, bd)) == [x + y for x, y in zip(a, b)]
        assert to_fracs(*backend.mat_sub(an, ad, bn, bd)) == [x - y for x, y in zip(a, b)]
        assert to_fracs(*backend.mat_scale(an, ad, 3, 7)) == [x * Fraction(3, 7) for x in a]

    @given(a=st.lists(rationals, min_size=12, max_size=12))
    @settings(max_examples=40, deadline=None)
    def test_rref_idempotent_and_pivots(self, backend, a):
        an, ad = to_kernel(a)
        rn, rd, piv = backend.rref(an, ad, 3, 4)
        # pivot columns hold unit vectors
        for row, col in enumerate(piv):
            for r in range(3):
                expect = 1 if r == row else 0
                assert rn[r * 4 + col] == expect and rd[r * 4 + col] == 1
        rn2, rd2, piv2 = backend.rref(rn, rd, 3, 4)
        assert (rn2, rd2, piv2) == (rn, rd, piv)

    @given(x=st.lists(rationals, min_size=3, max_size=3),
           y=st.lists(rationals, min_size=3, max_size=3),
           t=st.lists(rationals, min_size=18, max_size=18))
    @settings(max_examples=40, deadline=None)
    def test_bilinear_apply(self, backend, x, y, t):
        tn, td = to_kernel(t)
        xn, xd = to_kernel(x)
        yn, yd = to_kernel(y)
        on, od = backend.bilinear_apply(tn, td, 3, 2, xn, xd, yn, yd)
        expected = [Fraction(0), Fraction(0)]
        for a in range(3):
            for b in range(3):
                for v in range(2):
                    expected[v] += x[a] * y[b] * t[(a * 3 + b) * 2 + v]
        assert to_fracs(on, od) == expected


def test_backends_agree_on_random_products():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend unavailable")
    import random
    rng = random.Random(7)
    for _ in range(30):
        rows, mid, cols = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
        an = [rng.randint(-9, 9) for _ in range(rows * mid)]
        ad = [rng.randint(1, 9) for _ in range(rows * mid)]
        bn = [rng.randint(-9, 9) for _ in range(mid * cols)]
        bd = [rng.randint(1, 9) for _ in range(mid * cols)]
        fa = to_fracs(an, ad)
        fb = to_fracs(bn, bd)
        kn, kd = to_kernel(fa)
        ln, ld = to_kernel(fb)
        assert pk.mat_mul(kn, kd, ln, ld, rows, mid, cols) == \
            ck.mat_mul(kn, kd, ln, ld, rows, mid, cols)
        assert pk.rref(kn, kd, rows, mid) == ck.rref(kn, kd, rows, mid)


def test_selected_backend_exports():
    for name in ("mat_mul", "mat_add", "mat_sub", "mat_scale", "rref",
                 "bilinear_apply", "t3_apply", "t3_contract0_at",
                 "axiom_j_holds", "rat_norm"):
        assert hasattr(selected, name)
    assert selected.BACKEND in ("python", "cython")


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_t3_contract_matches_t3_apply(backend):
    import random
    rng = random.Random(3)
    dim, vdim = 3, 2
    t = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(dim ** 3 * vdim)]
    x = [Fraction(rng.randint(-5, 5)) for _ in range(dim)]
    tn, td = to_kernel(t)
    xn, xd = to_kernel(x)
    for b in range(dim):
        for c in range(dim):
            yb = [Fraction(1 if i == b else 0) for i in range(dim)]
            zc = [Fraction(1 if i == c else 0) for i in range(dim)]
            direct = backend.t3_contract0_at(tn, td, dim, vdim, xn, xd, b, c)
            full = backend.t3_apply(tn, td, dim, vdim, xn, xd,
                                    *to_kernel(yb), *to_kernel(zc))
            assert direct == full
