"""Pure-Python reference implementation of the exact-rational kernels.

A matrix (or flat tensor) is a pair of equally long integer lists
``(nums, dens)`` in row-major order.  Every entry is kept canonical:
``gcd(|num|, den) == 1``, ``den > 0`` and zero is ``0/1``.  All functions
are pure and return freshly allocated lists, so values can be shared
freely between threads.

The compiled backend (``_cykernel``) implements the same functions with
identical semantics; keep the two files in sync.
"""

from math import gcd

BACKEND = "python"


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


def _add(an, ad, bn, bd):
    # canonical-in, canonical-out rational addition
    if an == 0:
        return bn, bd
    if bn == 0:
        return an, ad
    g = gcd(ad, bd)
    if g == 1:
        return an * bd + bn * ad, ad * bd
    s = ad // g
    t = an * (bd // g) + bn * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * bd
    return t // g2, s * (bd // g2)


def _mul(an, ad, bn, bd):
    if an == 0 or bn == 0:
        return 0, 1
    g1 = gcd(an, bd)
    if g1 > 1:
        an //= g1
        bd //= g1
    g2 = gcd(bn, ad)
    if g2 > 1:
        bn //= g2
        ad //= g2
    return an * bn, ad * bd


def mat_mul(an, ad, bn, bd, n, k, m):
    """Product of an n*k and a k*m matrix."""
    cn = [0] * (n * m)
    cd = [1] * (n * m)
    for i in range(n):
        row = i * k
        out = i * m
        for j in range(m):
            sn, sd = 0, 1
            for t in range(k):
                xn = an[row + t]
                if not xn:
                    continue
                yn = bn[t * m + j]
                if not yn:
                    continue
                pn, pd = _mul(xn, ad[row + t], yn, bd[t * m + j])
                sn, sd = _add(sn, sd, pn, pd)
            cn[out + j] = sn
            cd[out + j] = sd
    return cn, cd


def mat_add(an, ad, bn, bd):
    cn = [0] * len(an)
    cd = [1] * len(an)
    for i in range(len(an)):
        cn[i], cd[i] = _add(an[i], ad[i], bn[i], bd[i])
    return cn, cd


def mat_sub(an, ad, bn, bd):
    cn = [0] * len(an)
    cd = [1] * len(an)
    for i in range(len(an)):
        cn[i], cd[i] = _add(an[i], ad[i], -bn[i], bd[i])
    return cn, cd


def mat_scale(an, ad, sn, sd):
    cn = [0] * len(an)
    cd = [1] * len(an)
    if sn:
        for i in range(len(an)):
            cn[i], cd[i] = _mul(an[i], ad[i], sn, sd)
    return cn, cd


def rref(an, ad, rows, cols):
    """Reduced row-echelon form by exact Gauss-Jordan elimination.

    Pivots are chosen left-to-right, topmost nonzero row first, and each
    pivot is normalized to 1, so the result is deterministic.  Returns
    ``(nums, dens, pivot_columns)``.
    """
    rn = list(an)
    rd = list(ad)
    pivots = []
    prow = 0
    for pc in range(cols):
        if prow == rows:
            break
        pr = -1
        for r in range(prow, rows):
            if rn[r * cols + pc]:
                pr = r
                break
        if pr < 0:
            continue
        if pr != prow:
            a, b = pr * cols, prow * cols
            for c in range(cols):
                rn[a + c], rn[b + c] = rn[b + c], rn[a + c]
                rd[a + c], rd[b + c] = rd[b + c], rd[a + c]
        base = prow * cols
        pn, pd = rn[base + pc], rd[base + pc]
        inv_n, inv_d = rat_norm(pd, pn)
        for c in range(pc, cols):
            if rn[base + c]:
                rn[base + c], rd[base + c] = _mul(
                    rn[base + c], rd[base + c], inv_n, inv_d)
        for r in range(rows):
            if r == prow:
                continue
            off = r * cols
            fn, fd = rn[off + pc], rd[off + pc]
            if not fn:
                continue
            for c in range(pc, cols):
                tn_ = rn[base + c]
                if not tn_:
                    continue
                qn, qd = _mul(fn, fd, tn_, rd[base + c])
                rn[off + c], rd[off + c] = _add(
                    rn[off + c], rd[off + c], -qn, qd)
        pivots.append(pc)
        prow += 1
    return rn, rd, pivots


def bilinear_apply(tn, td, dim, vdim, xn, xd, yn, yd):
    """sum_{a,b} x_a * y_b * T[a][b][:]  for a dim*dim*vdim tensor."""
    on = [0] * vdim
    od = [1] * vdim
    for a in range(dim):
        xa = xn[a]
        if not xa:
            continue
        xda = xd[a]
        arow = a * dim
        for b in range(dim):
            yb = yn[b]
            if not yb:
                continue
            sn, sd = _mul(xa, xda, yb, yd[b])
            off = (arow + b) * vdim
            for t in range(vdim):
                cn = tn[off + t]
                if not cn:
                    continue
                pn, pd = _mul(sn, sd, cn, td[off + t])
                on[t], od[t] = _add(on[t], od[t], pn, pd)
    return on, od


def t3_apply(tn, td, dim, vdim, xn, xd, yn, yd, zn, zd):
    """sum_{a,b,c} x_a * y_b * z_c * T[a][b][c][:]."""
    on = [0] * vdim
    od = [1] * vdim
    for a in range(dim):
        xa = xn[a]
        if not xa:
            continue
        xda = xd[a]
        for b in range(dim):
            yb = yn[b]
            if not yb:
                continue
            sn, sd = _mul(xa, xda, yb, yd[b])
            row = (a * dim + b) * dim
            for c in range(dim):
                zc = zn[c]
                if not zc:
                    continue
                un, ud = _mul(sn, sd, zc, zd[c])
                off = (row + c) * vdim
                for t in range(vdim):
                    cn = tn[off + t]
                    if not cn:
                        continue
                    pn, pd = _mul(un, ud, cn, td[off + t])
                    on[t], od[t] = _add(on[t], od[t], pn, pd)
    return on, od


def t3_contract0_at(tn, td, dim, vdim, xn, xd, b, c):
    """sum_a x_a * T[a][b][c][:]  (first-slot contraction at fixed b, c)."""
    on = [0] * vdim
    od = [1] * vdim
    for a in range(dim):
        xa = xn[a]
        if not xa:
            continue
        off = ((a * dim + b) * dim + c) * vdim
        for t in range(vdim):
            cn = tn[off + t]
            if not cn:
                continue
            pn, pd = _mul(xa, xd[a], cn, td[off + t])
            on[t], od[t] = _add(on[t], od[t], pn, pd)
    return on, od


def _acc_t3(on, od, sign, tn, td, dim, vdim, xn, xd, xoff, b, c):
    for a in range(dim):
        xa = xn[xoff + a]
        if not xa:
            continue
        off = ((a * dim + b) * dim + c) * vdim
        for t in range(vdim):
            cn = tn[off + t]
            if not cn:
                continue
            pn, pd = _mul(xa, xd[xoff + a], cn, td[off + t])
            if sign < 0:
                pn = -pn
            on[t], od[t] = _add(on[t], od[t], pn, pd)


def axiom_j_holds(dim0, vdim, A_n, A_d, l3n, l3d, tn, td, Ln, Ld, w, x, y, z):
    """Ten-term coherence identity for one basis quadruple.

    ``A`` is the l3 tensor with the twist pre-applied to its last two
    slots, ``t`` the degree-0 bracket table, ``l3`` the raw Jacobiator
    table and ``L[i]`` the vdim*vdim matrix of m -> l2(phi0^2 e_i, m).
    Returns True when the defect vector vanishes.
    """
    on = [0] * vdim
    od = [1] * vdim
    # l3-type terms: sign * l3(t_pq, phi0 e_b, phi0 e_c) = sign * A(t_pq; b, c)
    for sign, p, q, b, c in (
        (1, w, x, y, z),
        (-1, x, z, w, y),
        (1, w, z, x, y),
        (-1, w, y, x, z),
        (1, x, y, w, z),
        (1, y, z, w, x),
    ):
        toff = (p * dim0 + q) * dim0
        _acc_t3(on, od, sign, A_n, A_d, dim0, vdim, tn, td, toff, b, c)
    # l2-type terms: sign * L[i] @ l3[p][q][r]
    for sign, i, p, q, r in (
        (-1, y, w, x, z),
        (1, z, w, x, y),
        (-1, w, x, y, z),
        (1, x, w, y, z),
    ):
        lbase = i * vdim * vdim
        voff = ((p * dim0 + q) * dim0 + r) * vdim
        for s in range(vdim):
            row = lbase + s * vdim
            for c in range(vdim):
                xc = l3n[voff + c]
                if not xc:
                    continue
                en = Ln[row + c]
                if not en:
                    continue
                pn, pd = _mul(en, Ld[row + c], xc, l3d[voff + c])
                if sign < 0:
                    pn = -pn
                on[s], od[s] = _add(on[s], od[s], pn, pd)
    for t in range(vdim):
        if on[t]:
            return False
    return True
