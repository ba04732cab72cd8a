"""Numba twins of the numpy kernels.

Same signatures and the same canonical output as _kernels_np; the
equivalence is enforced by tests that run both backends side by side.
Compiled lazily on first call, with an on-disk cache.
"""

import numpy as np
from numba import njit

LEX = 0
GREVLEX = 1
BLOCK = 2


@njit(cache=True)
def _modinv(a, p):
    r = 1
    b = a % p
    e = p - 2
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@njit(cache=True)
def _cmp_grevlex_range(a, b, lo, hi):
    da = 0
    db = 0
    for i in range(lo, hi):
        da += a[i]
        db += b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(hi - 1, lo - 1, -1):
        if a[i] != b[i]:
            return -1 if a[i] > b[i] else 1
    return 0


@njit(cache=True)
def cmp_exps(a, b, code, k):
    n = a.shape[0]
    if code == LEX:
        for i in range(n):
            if a[i] != b[i]:
                return 1 if a[i] > b[i] else -1
        return 0
    if code == GREVLEX:
        return _cmp_grevlex_range(a, b, 0, n)
    c = _cmp_grevlex_range(a, b, 0, k)
    if c != 0:
        return c
    return _cmp_grevlex_range(a, b, k, n)


@njit(cache=True)
def merge_terms(e1, c1, e2, c2, p, code, k):
    n1 = e1.shape[0]
    n2 = e2.shape[0]
    v = e1.shape[1]
    oe = np.empty((n1 + n2, v), np.int64)
    oc = np.empty(n1 + n2, np.int64)
    i = 0
    j = 0
    m = 0
    while i < n1 and j < n2:
        c = cmp_exps(e1[i], e2[j], code, k)
        if c > 0:
            oe[m, :] = e1[i, :]
            oc[m] = c1[i]
            i += 1
            m += 1
        elif c < 0:
            oe[m, :] = e2[j, :]
            oc[m] = c2[j]
            j += 1
            m += 1
        else:
            s = (c1[i] + c2[j]) % p
            if s != 0:
                oe[m, :] = e1[i, :]
                oc[m] = s
                m += 1
            i += 1
            j += 1
    while i < n1:
        oe[m, :] = e1[i, :]
        oc[m] = c1[i]
        i += 1
        m += 1
    while j < n2:
        oe[m, :] = e2[j, :]
        oc[m] = c2[j]
        j += 1
        m += 1
    return oe[:m].copy(), oc[:m].copy()


@njit(cache=True)
def mul_terms(e1, c1, e2, c2, p, code, k):
    v = e1.shape[1]
    if e1.shape[0] == 0 or e2.shape[0] == 0:
        return np.empty((0, v), np.int64), np.empty(0, np.int64)
    ae, ac, be, bc = e1, c1, e2, c2
    if ae.shape[0] > be.shape[0]:
        ae, ac, be, bc = e2, c2, e1, c1
    acc_e = np.empty((0, v), np.int64)
    acc_c = np.empty(0, np.int64)
    for i in range(ae.shape[0]):
        te = be + ae[i]
        tc = (bc * ac[i]) % p
        acc_e, acc_c = merge_terms(acc_e, acc_c, te, tc, p, code, k)
    return acc_e, acc_c


@njit(cache=True)
def normal_form_terms(fe, fc, be, bc, offs, p, code, k):
    v = fe.shape[1]
    nb = offs.shape[0] - 1
    he = fe.copy()
    hc = fc.copy()
    cap = 16
    re = np.empty((cap, v), np.int64)
    rc = np.empty(cap, np.int64)
    rn = 0
    while he.shape[0] > 0:
        jdiv = -1
        for j in range(nb):
            lo = offs[j]
            ok = True
            for t in range(v):
                if be[lo, t] > he[0, t]:
                    ok = False
                    break
            if ok:
                jdiv = j
                break
        if jdiv < 0:
            if rn == cap:
                cap *= 2
                ne = np.empty((cap, v), np.int64)
                nc = np.empty(cap, np.int64)
                ne[:rn] = re[:rn]
                nc[:rn] = rc[:rn]
                re = ne
                rc = nc
            re[rn, :] = he[0, :]
            rc[rn] = hc[0]
            rn += 1
            he = np.ascontiguousarray(he[1:])
            hc = np.ascontiguousarray(hc[1:])
        else:
            lo = offs[jdiv]
            hi = offs[jdiv + 1]
            coef = (hc[0] * _modinv(bc[lo], p)) % p
            q = he[0] - be[lo]
            ge = be[lo:hi] + q
            gc = (bc[lo:hi] * (p - coef)) % p
            he, hc = merge_terms(he, hc, ge, gc, p, code, k)
    return re[:rn].copy(), rc[:rn].copy()
