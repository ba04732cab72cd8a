"""Pure numpy backend for the term-array kernels.

A polynomial is a pair (exps, coeffs): an int64 exponent matrix with one
row per term and a parallel int64 coefficient vector, rows sorted strictly
descending in the active monomial order, coefficients reduced to [1, p).
Monomial orders are encoded as (code, k): 0 lex, 1 graded reverse lex,
2 elimination order whose leading block is the first k variables, grevlex
inside each block.
"""

import numpy as np

LEX = 0
GREVLEX = 1
BLOCK = 2


def modinv(a, p):
    """Inverse of a mod p, p prime, by Fermat exponentiation."""
    r, b, e = 1, a % p, p - 2
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


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


def cmp_exps(a, b, code, k):
    """Three-way comparison of two exponent rows under the encoded order."""
    n = len(a)
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


def sort_keys(exps, code, k):
    """Key matrix whose row-wise lexicographic order matches the monomial order."""
    if code == LEX:
        return exps
    if code == GREVLEX:
        tot = exps.sum(axis=1, dtype=np.int64).reshape(-1, 1)
        return np.hstack((tot, -exps[:, ::-1]))
    left = sort_keys(exps[:, :k], GREVLEX, 0)
    right = sort_keys(exps[:, k:], GREVLEX, 0)
    return np.hstack((left, right))


def sort_perm_desc(exps, code, k):
    keys = sort_keys(exps, code, k)
    # lexsort treats its last key as primary, so feed columns reversed
    return np.lexsort(keys.T[::-1])[::-1]


def canon_terms(exps, coeffs, p, code, k):
    """Canonical form: rows sorted descending, duplicates merged mod p, zeros dropped."""
    exps = np.asarray(exps, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if exps.shape[0] == 0:
        return exps, coeffs[:0]
    idx = sort_perm_desc(exps, code, k)
    e = exps[idx]
    c = coeffs[idx] % p
    if e.shape[0] > 1:
        fresh = np.empty(e.shape[0], dtype=bool)
        fresh[0] = True
        np.any(e[1:] != e[:-1], axis=1, out=fresh[1:])
        starts = np.flatnonzero(fresh)
        c = np.add.reduceat(c, starts) % p
        e = e[starts]
    keep = c != 0
    return np.ascontiguousarray(e[keep]), np.ascontiguousarray(c[keep])


def merge_terms(e1, c1, e2, c2, p, code, k):
    """Sum of two canonical term arrays."""
    if e1.shape[0] == 0:
        return e2, c2
    if e2.shape[0] == 0:
        return e1, c1
    return canon_terms(
        np.concatenate((e1, e2)), np.concatenate((c1, c2)), p, code, k
    )


def mul_terms(e1, c1, e2, c2, p, code, k):
    """Product of two canonical term arrays."""
    n1, n2 = e1.shape[0], e2.shape[0]
    if n1 == 0 or n2 == 0:
        return e1[:0], c1[:0]
    ee = (e1[:, None, :] + e2[None, :, :]).reshape(n1 * n2, e1.shape[1])
    # coefficients stay below p^2 <= 2^62, safe in int64
    cc = (c1[:, None] * c2[None, :]).reshape(n1 * n2) % p
    return canon_terms(ee, cc, p, code, k)


def normal_form_terms(fe, fc, be, bc, offs, p, code, k):
    """Remainder of full division of (fe, fc) by the concatenated basis.

    The basis is be/bc split at offsets offs; row offs[j] is the leading
    term of basis element j. Always reduces the first divisor found, in
    basis order, so the result is deterministic.
    """
    lms = be[offs[:-1]]
    he, hc = fe, fc
    rows = []
    vals = []
    while he.shape[0]:
        lead = he[0]
        hits = np.flatnonzero(np.all(lms <= lead, axis=1))
        if hits.size == 0:
            rows.append(lead)
            vals.append(int(hc[0]))
            he = he[1:]
            hc = hc[1:]
            continue
        j = int(hits[0])
        lo, hi = int(offs[j]), int(offs[j + 1])
        coef = (int(hc[0]) * modinv(int(bc[lo]), p)) % p
        ge = be[lo:hi] + (lead - be[lo])
        gc = (bc[lo:hi] * (p - coef)) % p
        he, hc = merge_terms(he, hc, ge, gc, p, code, k)
    if not rows:
        return fe[:0], fc[:0]
    return np.array(rows, dtype=np.int64), np.array(vals, dtype=np.int64)
