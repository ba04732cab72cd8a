"""Frobenius operations in characteristic p.

Bracket powers raise every generator to the p^e power, which for F_p
coefficients is exponent scaling. Frobenius roots invert them: the e-th
root of an ideal is the smallest ideal J with I contained in the e-th
bracket power of J. One root step decomposes each generator g as
sum_A x^A h_A^p over residue patterns A in [0,p)^n; the pieces h_A of all
generators generate the root, and the e-th root is the step iterated e
times. Fedder's criterion for F-purity of a complete intersection sits on
top: (u^[p] : u) must not land inside the bracket power of the maximal
ideal, with the classical one-equation shortcut u^(p-1) not in m^[p].
"""

from __future__ import annotations

import numpy as np

from . import config
from .errors import SetupError
from .groebner import DEFAULT_LIMITS, Ideal, Limits
from .ring import EXP_LIMIT, Polynomial

__all__ = [
    "frobenius_power",
    "bracket_power",
    "frobenius_root",
    "fedder_f_pure",
]


def frobenius_power(f: Polynomial, e: int = 1) -> Polynomial:
    """f^(p^e), computed by scaling exponents; coefficients are fixed by
    Fermat since c^p = c in F_p."""
    if e < 0:
        raise ValueError("Frobenius power needs e >= 0")
    if e == 0 or f.is_zero():
        return f
    q = f.ring.p**e
    if int(f.exps.max()) * q > EXP_LIMIT:
        raise OverflowError("exponent overflow in Frobenius power")
    return f.ring._poly(f.exps * q, f.coeffs)


def bracket_power(ideal: Ideal, e: int = 1) -> Ideal:
    """The ideal generated by g^(p^e) for g in the generators."""
    return Ideal(ideal.ring, tuple(frobenius_power(g, e) for g in ideal.gens))


def _root_step(ideal: Ideal) -> Ideal:
    ring = ideal.ring
    p = ring.p
    pieces: list[Polynomial] = []
    for g in ideal.gens:
        q, a = np.divmod(g.exps, p)
        patterns, inverse = np.unique(a, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)  # shape differs across numpy versions
        for idx in range(patterns.shape[0]):
            rows = inverse == idx
            pieces.append(ring.make_poly(q[rows], g.coeffs[rows]))
    return Ideal(ring, pieces)


def frobenius_root(ideal: Ideal, e: int = 1) -> Ideal:
    """Smallest ideal whose e-th bracket power contains the input."""
    if e < 0:
        raise ValueError("Frobenius root needs e >= 0")
    for _ in range(e):
        ideal = _root_step(ideal)
    return ideal


def fedder_f_pure(u: Ideal, limits: Limits | None = None) -> bool:
    """Fedder's criterion: is R/u F-pure, for u a complete intersection."""
    ring = u.ring
    if not u.gens:
        raise SetupError("Fedder's criterion needs at least one equation")
    m = Ideal(ring, ring.gens())
    m_bracket = bracket_power(m, 1)
    general = None
    if len(u.gens) > 1 or config.DEBUG:
        quot = bracket_power(u, 1).colon(u, limits)
        general = not all(m_bracket.contains(g, limits) for g in quot.gens)
    if len(u.gens) == 1:
        w = u.gens[0] ** (ring.p - 1)
        shortcut = not m_bracket.contains(w, limits)
        if general is not None and general != shortcut:
            raise AssertionError(
                "Fedder shortcut and colon form disagree for one equation"
            )
        return shortcut
    return general
