# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the exact-rational kernels.

Mirror of ``_pykernel``: identical function signatures and semantics,
with the loop and rational-normalization overhead compiled away.
Numerators and denominators stay arbitrary-precision Python ints.
"""

from math import gcd

BACKEND = "cython"


cdef inline object _gcd(object a, object b):
    return gcd(a, b)


def rat_norm(n, d):
    """Bring n/d to canonical form.  d may be negative but not zero."""
    if n == 0:
        return 0, 1
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


cdef inline tuple _add(object an, object ad, object bn, object bd):
    cdef object g, s, t, g2
    if an == 0:
        return bn, bd
    if bn == 0:
        return an, ad
    g = _gcd(ad, bd)
    if g == 1:
        return an * bd + bn * ad, ad * bd
    s = ad // g
    t = an * (bd // g) + bn * s
    g2 = _gcd(t, g)
    if g2 == 1:
        return t, s * bd
    return t // g2, s * (bd // g2)


cdef inline tuple _mul(object an, object ad, object bn, object bd):
    cdef object g1, g2
    if an == 0 or bn == 0:
        return 0, 1
    g1 = _gcd(an, bd)
    if g1 > 1:
        an //= g1
        bd //= g1
    g2 = _gcd(bn, ad)
    if g2 > 1:
        bn //= g2
        ad //= g2
    return an * bn, ad * bd


def mat_mul(list an, list ad, list bn, list bd, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Product of an n*k and a k*m matrix."""
    cdef list cn = [0] * (n * m)
    cdef list cd = [1] * (n * m)
    cdef Py_ssize_t i, j, t, row, out
    cdef object sn, sd, xn, yn, pn, pd
    for i in range(n):
        row = i * k
        out = i * m
        for j in range(m):
            sn = 0
            sd = 1
            for t in range(k):
                xn = an[row + t]
                if xn == 0:
                    continue
                yn = bn[t * m + j]
                if yn == 0:
                    continue
                pn, pd = _mul(xn, ad[row + t], yn, bd[t * m + j])
                sn, sd = _add(sn, sd, pn, pd)
            cn[out + j] = sn
            cd[out + j] = sd
    return cn, cd


def mat_add(list an, list ad, list bn, list bd):
    cdef Py_ssize_t size = len(an)
    cdef list cn = [0] * size
    cdef list cd = [1] * size
    cdef Py_ssize_t i
    cdef object rn, rd
    for i in range(size):
        rn, rd = _add(an[i], ad[i], bn[i], bd[i])
        cn[i] = rn
        cd[i] = rd
    return cn, cd


def mat_sub(list an, list ad, list bn, list bd):
    cdef Py_ssize_t size = len(an)
    cdef list cn = [0] * size
    cdef list cd = [1] * size
    cdef Py_ssize_t i
    cdef object rn, rd
    for i in range(size):
        rn, rd = _add(an[i], ad[i], -bn[i], bd[i])
        cn[i] = rn
        cd[i] = rd
    return cn, cd


def mat_scale(list an, list ad, sn, sd):
    cdef Py_ssize_t size = len(an)
    cdef list cn = [0] * size
    cdef list cd = [1] * size
    cdef Py_ssize_t i
    cdef object rn, rd
    if sn != 0:
        for i in range(size):
            rn, rd = _mul(an[i], ad[i], sn, sd)
            cn[i] = rn
            cd[i] = rd
    return cn, cd


def rref(an, ad, Py_ssize_t rows, Py_ssize_t cols):
    """Reduced row-echelon form by exact Gauss-Jordan elimination.

    Pivots are chosen left-to-right, topmost nonzero row first, and each
    pivot is normalized to 1, so the result is deterministic.  Returns
    ``(nums, dens, pivot_columns)``.
    """
    cdef list rn = list(an)
    cdef list rd = list(ad)
    cdef list pivots = []
    cdef Py_ssize_t prow = 0, pc, pr, r, c, a, b, base, off
    cdef object pn, pd, inv_n, inv_d, fn, fd, tn_, qn, qd, resn, resd
    for pc in range(cols):
        if prow == rows:
            break
        pr = -1
        for r in range(prow, rows):
            if rn[r * cols + pc] != 0:
                pr = r
                break
        if pr < 0:
            continue
        if pr != prow:
            a = pr * cols
            b = prow * cols
            for c in range(cols):
                rn[a + c], rn[b + c] = rn[b + c], rn[a + c]
                rd[a + c], rd[b + c] = rd[b + c], rd[a + c]
        base = prow * cols
        pn = rn[base + pc]
        pd = rd[base + pc]
        inv_n, inv_d = rat_norm(pd, pn)
        for c in range(pc, cols):
            if rn[base + c] != 0:
                resn, resd = _mul(rn[base + c], rd[base + c], inv_n, inv_d)
                rn[base + c] = resn
                rd[base + c] = resd
        for r in range(rows):
            if r == prow:
                continue
            off = r * cols
            fn = rn[off + pc]
            if fn == 0:
                continue
            fd = rd[off + pc]
            for c in range(pc, cols):
                tn_ = rn[base + c]
                if tn_ == 0:
                    continue
                qn, qd = _mul(fn, fd, tn_, rd[base + c])
                resn, resd = _add(rn[off + c], rd[off + c], -qn, qd)
                rn[off + c] = resn
                rd[off + c] = resd
        pivots.append(pc)
        prow += 1
    return rn, rd, pivots


def bilinear_apply(list tn, list td, Py_ssize_t dim, Py_ssize_t vdim,
                   list xn, list xd, list yn, list yd):
    """sum_{a,b} x_a * y_b * T[a][b][:]  for a dim*dim*vdim tensor."""
    cdef list on = [0] * vdim
    cdef list od = [1] * vdim
    cdef Py_ssize_t a, b, t, arow, off
    cdef object xa, xda, yb, sn, sd, cn, pn, pd, resn, resd
    for a in range(dim):
        xa = xn[a]
        if xa == 0:
            continue
        xda = xd[a]
        arow = a * dim
        for b in range(dim):
            yb = yn[b]
            if yb == 0:
                continue
            sn, sd = _mul(xa, xda, yb, yd[b])
            off = (arow + b) * vdim
            for t in range(vdim):
                cn = tn[off + t]
                if cn == 0:
                    continue
                pn, pd = _mul(sn, sd, cn, td[off + t])
                resn, resd = _add(on[t], od[t], pn, pd)
                on[t] = resn
                od[t] = resd
    return on, od


def t3_apply(list tn, list td, Py_ssize_t dim, Py_ssize_t vdim,
             list xn, list xd, list yn, list yd, list zn, list zd):
    """sum_{a,b,c} x_a * y_b * z_c * T[a][b][c][:]."""
    cdef list on = [0] * vdim
    cdef list od = [1] * vdim
    cdef Py_ssize_t a, b, c, t, row, off
    cdef object xa, xda, yb, zc, sn, sd, un, ud, cn, pn, pd, resn, resd
    for a in range(dim):
        xa = xn[a]
        if xa == 0:
            continue
        xda = xd[a]
        for b in range(dim):
            yb = yn[b]
            if yb == 0:
                continue
            sn, sd = _mul(xa, xda, yb, yd[b])
            row = (a * dim + b) * dim
            for c in range(dim):
                zc = zn[c]
                if zc == 0:
                    continue
                un, ud = _mul(sn, sd, zc, zd[c])
                off = (row + c) * vdim
                for t in range(vdim):
                    cn = tn[off + t]
                    if cn == 0:
                        continue
                    pn, pd = _mul(un, ud, cn, td[off + t])
                    resn, resd = _add(on[t], od[t], pn, pd)
                    on[t] = resn
                    od[t] = resd
    return on, od


def t3_contract0_at(list tn, list td, Py_ssize_t dim, Py_ssize_t vdim,
                    list xn, list xd, Py_ssize_t b, Py_ssize_t c):
    """sum_a x_a * T[a][b][c][:]  (first-slot contraction at fixed b, c)."""
    cdef list on = [0] * vdim
    cdef list od = [1] * vdim
    cdef Py_ssize_t a, t, off
    cdef object xa, cn, pn, pd, resn, resd
    for a in range(dim):
        xa = xn[a]
        if xa == 0:
            continue
        off = ((a * dim + b) * dim + c) * vdim
        for t in range(vdim):
            cn = tn[off + t]
            if cn == 0:
                continue
            pn, pd = _mul(xa, xd[a], cn, td[off + t])
            resn, resd = _add(on[t], od[t], pn, pd)
            on[t] = resn
            od[t] = resd
    return on, od


cdef void _acc_t3(list on, list od, int sign, list tn, list td,
                  Py_ssize_t dim, Py_ssize_t vdim,
                  list xn, list xd, Py_ssize_t xoff,
                  Py_ssize_t b, Py_ssize_t c):
    cdef Py_ssize_t a, t, off
    cdef object xa, cn, pn, pd, resn, resd
    for a in range(dim):
        xa = xn[xoff + a]
        if xa == 0:
            continue
        off = ((a * dim + b) * dim + c) * vdim
        for t in range(vdim):
            cn = tn[off + t]
            if cn == 0:
                continue
            pn, pd = _mul(xa, xd[xoff + a], cn, td[off + t])
            if sign < 0:
                pn = -pn
            resn, resd = _add(on[t], od[t], pn, pd)
            on[t] = resn
            od[t] = resd


def axiom_j_holds(Py_ssize_t dim0, Py_ssize_t vdim,
                  list A_n, list A_d, list l3n, list l3d,
                  list tn, list td, list Ln, list Ld,
                  Py_ssize_t w, Py_ssize_t x, Py_ssize_t y, Py_ssize_t z):
    """Ten-term coherence identity for one basis quadruple.

    ``A`` is the l3 tensor with the twist pre-applied to its last two
    slots, ``t`` the degree-0 bracket table, ``l3`` the raw Jacobiator
    table and ``L[i]`` the vdim*vdim matrix of m -> l2(phi0^2 e_i, m).
    Returns True when the defect vector vanishes.
    """
    cdef list on = [0] * vdim
    cdef list od = [1] * vdim
    cdef Py_ssize_t toff, lbase, voff, s, c, row
    cdef object xc, en, pn, pd, resn, resd
    cdef int sign

    toff = (w * dim0 + x) * dim0
    _acc_t3(on, od, 1, A_n, A_d, dim0, vdim, tn, td, toff, y, z)
    toff = (x * dim0 + z) * dim0
    _acc_t3(on, od, -1, A_n, A_d, dim0, vdim, tn, td, toff, w, y)
    toff = (w * dim0 + z) * dim0
    _acc_t3(on, od, 1, A_n, A_d, dim0, vdim, tn, td, toff, x, y)
    toff = (w * dim0 + y) * dim0
    _acc_t3(on, od, -1, A_n, A_d, dim0, vdim, tn, td, toff, x, z)
    toff = (x * dim0 + y) * dim0
    _acc_t3(on, od, 1, A_n, A_d, dim0, vdim, tn, td, toff, w, z)
    toff = (y * dim0 + z) * dim0
    _acc_t3(on, od, 1, A_n, A_d, dim0, vdim, tn, td, toff, w, x)

    cdef Py_ssize_t i, p, q, r, idx
    for idx in range(4):
        if idx == 0:
            sign = -1; i = y; p = w; q = x; r = z
        elif idx == 1:
            sign = 1; i = z; p = w; q = x; r = y
        elif idx == 2:
            sign = -1; i = w; p = x; q = y; r = z
        else:
            sign = 1; i = x; p = w; q = y; r = z
        lbase = i * vdim * vdim
        voff = ((p * dim0 + q) * dim0 + r) * vdim
        for s in range(vdim):
            row = lbase + s * vdim
            for c in range(vdim):
                xc = l3n[voff + c]
                if xc == 0:
                    continue
                en = Ln[row + c]
                if en == 0:
                    continue
                pn, pd = _mul(en, Ld[row + c], xc, l3d[voff + c])
                if sign < 0:
                    pn = -pn
                resn, resd = _add(on[s], od[s], pn, pd)
                on[s] = resn
                od[s] = resd

    for s in range(vdim):
        if on[s] != 0:
            return False
    return True
