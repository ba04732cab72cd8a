"""Ideals and reduced Groebner bases.

Buchberger's algorithm with the normal (minimal-lcm) selection strategy,
the coprime-leading-term criterion, and the chain criterion, guarded by
hard caps on processed pairs and basis size. Bases are interreduced to
the unique reduced monic form and sorted descending by leading monomial,
so two ideals are equal exactly when their reduced bases are structurally
equal. Each Ideal caches one basis per monomial order, write-once.

Intersections go through a single auxiliary variable in the leading block
of an elimination order; colon ideals divide the intersection with a
principal ideal; Krull dimension of the quotient comes from the maximal
subsets of variables meeting no leading-monomial support.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ResourceLimitError, SetupError
from .ring import MonomialOrder, Polynomial, Ring


@dataclass(frozen=True)
class Limits:
    """Resource caps threaded through every computation."""

    max_pairs: int = 100_000
    max_basis: int = 100_000
    max_rounds: int = 64
    e_max: int = 10
    max_members: int = 512


DEFAULT_LIMITS = Limits()


def _mono_key(order: MonomialOrder, row: np.ndarray) -> tuple:
    return tuple(int(x) for x in order.key(row.reshape(1, -1))[0])


def _basis_arrays(polys) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    be = np.concatenate([g.exps for g in polys], axis=0)
    bc = np.concatenate([g.coeffs for g in polys])
    offs = np.zeros(len(polys) + 1, dtype=np.int64)
    for i, g in enumerate(polys):
        offs[i + 1] = offs[i] + g.coeffs.shape[0]
    return be, bc, offs


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f on full division by a list of polynomials."""
    ring = f.ring
    order = order or ring.order
    basis = [g for g in basis if not g.is_zero()]
    if f.is_zero() or not basis:
        return f
    be, bc, offs = _basis_arrays(basis)
    e, c = kernels.normal_form_terms(
        f.exps, f.coeffs, be, bc, offs, ring.p, order.code, order.block
    )
    return ring._poly(e, c)


def buchberger(ring: Ring, gens, order: MonomialOrder,
               limits: Limits | None = None):
    limits = limits if limits is not None else DEFAULT_LIMITS
    """Reduced monic Groebner basis of the given generators, as a tuple."""
    p = ring.p
    code, k = order.code, order.block
    basis: list[Polynomial] = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        g = g.monic()
        key = g.key()
        if key in seen:
            continue
        seen.add(key)
        if g.total_degree() == 0:
            return (ring.one(),)
        basis.append(g)
    if not basis:
        return ()
    lms = [g.exps[0] for g in basis]

    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push(i: int, j: int):
        l = np.maximum(lms[i], lms[j])
        heapq.heappush(heap, (_mono_key(order, l), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    be = bc = offs = None
    dirty = True
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimitError(
                f"Groebner computation exceeded max_pairs={limits.max_pairs}",
                partial=tuple(basis),
            )
        li, lj = lms[i], lms[j]
        lcm = np.maximum(li, lj)
        if np.array_equal(lcm, li + lj):
            continue  # coprime leading monomials reduce to zero
        chained = False
        for t in range(len(basis)):
            if t == i or t == j:
                continue
            if np.all(lms[t] <= lcm):
                a = (t, i) if t < i else (i, t)
                b = (t, j) if t < j else (j, t)
                if a not in pending and b not in pending:
                    chained = True
                    break
        if chained:
            continue
        fi, fj = basis[i], basis[j]
        ae, ac = kernels.scale_terms(fi.exps, fi.coeffs, lcm - li, 1, p)
        ge, gc = kernels.scale_terms(fj.exps, fj.coeffs, lcm - lj, p - 1, p)
        se, sc = kernels.merge_terms(ae, ac, ge, gc, p, code, k)
        if se.shape[0] == 0:
            continue
        if dirty:
            be, bc, offs = _basis_arrays(basis)
            dirty = False
        re, rc = kernels.normal_form_terms(se, sc, be, bc, offs, p, code, k)
        if re.shape[0] == 0:
            continue
        inv = kernels.modinv(int(rc[0]), p)
        g = ring._poly(re, (rc * inv) % p)
        if g.total_degree() == 0:
            return (ring.one(),)
        basis.append(g)
        lms.append(g.exps[0])
        if len(basis) > limits.max_basis:
            raise ResourceLimitError(
                f"Groebner basis exceeded max_basis={limits.max_basis}",
                partial=tuple(basis),
            )
        new = len(basis) - 1
        for t in range(new):
            push(t, new)
        dirty = True
    return _reduce_basis(ring, basis, order)


def _reduce_basis(ring: Ring, basis, order: MonomialOrder):
    p = ring.p
    code, k = order.code, order.block
    idxs = sorted(range(len(basis)), key=lambda t: _mono_key(order, basis[t].exps[0]))
    kept: list[Polynomial] = []
    kept_lms: list[np.ndarray] = []
    for t in idxs:
        lm = basis[t].exps[0]
        if any(np.all(m <= lm) for m in kept_lms):
            continue
        kept.append(basis[t])
        kept_lms.append(lm)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        if others:
            be, bc, offs = _basis_arrays(others)
            re, rc = kernels.normal_form_terms(
                g.exps, g.coeffs, be, bc, offs, p, code, k
            )
        else:
            re, rc = g.exps, g.coeffs
        inv = kernels.modinv(int(rc[0]), p)
        out.append(ring._poly(re, (rc * inv) % p))
    out.sort(key=lambda q: _mono_key(order, q.exps[0]), reverse=True)
    return tuple(out)


def divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    ring = f.ring
    p = ring.p
    code, k = ring.order.code, ring.order.block
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    glm = g.exps[0]
    ginv = kernels.modinv(int(g.coeffs[0]), p)
    he, hc = f.exps, f.coeffs
    qrows = []
    qcoeffs = []
    while he.shape[0]:
        lead = he[0]
        if np.any(glm > lead):
            raise ArithmeticError("not an exact multiple")
        m = lead - glm
        c = (int(hc[0]) * ginv) % p
        qrows.append(m)
        qcoeffs.append(c)
        se, sc = kernels.scale_terms(g.exps, g.coeffs, m, p - c, p)
        he, hc = kernels.merge_terms(he, hc, se, sc, p, code, k)
    return ring._poly(np.array(qrows, dtype=np.int64), np.array(qcoeffs, dtype=np.int64))


class Ideal:
    """Finitely generated ideal of a Ring; caches one reduced basis per order."""

    __slots__ = ("ring", "gens", "_gb", "_nf_arrays", "_dim")

    def __init__(self, ring: Ring, gens=()):
        self.ring = ring
        out = []
        seen = set()
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise SetupError("generators must be polynomials of the same ring")
            if g.is_zero():
                continue
            key = g.key()
            if key in seen:
                continue
            seen.add(key)
            out.append(g)
        self.gens = tuple(out)
        self._gb: dict = {}
        self._nf_arrays: dict = {}
        self._dim: int | None = None

    @classmethod
    def _from_reduced_gb(cls, ring: Ring, gb: tuple) -> "Ideal":
        ideal = cls(ring, gb)
        ideal._gb[(ring.order.kind, ring.order.block)] = gb
        return ideal

    def __repr__(self) -> str:
        return f"Ideal({self})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def groebner(self, order: MonomialOrder | None = None, limits: Limits | None = None):
        """Reduced monic basis under `order` (default: the ring order).
        Cached write-once per order; the first call's limits apply."""
        order = order or self.ring.order
        key = (order.kind, order.block)
        gb = self._gb.get(key)
        if gb is None:
            gb = buchberger(self.ring, self.gens, order, limits)
            self._gb[key] = gb
        return gb

    def _arrays(self, order: MonomialOrder, limits: Limits):
        key = (order.kind, order.block)
        arrs = self._nf_arrays.get(key)
        if arrs is None:
            gb = self.groebner(order, limits)
            arrs = _basis_arrays(gb) if gb else None
            self._nf_arrays[key] = arrs
        return arrs

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None,
                    limits: Limits | None = None) -> Polynomial:
        order = order or self.ring.order
        arrs = self._arrays(order, limits)
        if arrs is None or f.is_zero():
            return f
        be, bc, offs = arrs
        e, c = kernels.normal_form_terms(
            f.exps, f.coeffs, be, bc, offs, self.ring.p, order.code, order.block
        )
        return self.ring._poly(e, c)

    # membership and comparisons

    def __contains__(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains(self, other, limits: Limits | None = None) -> bool:
        """Containment: a polynomial, or every generator of an ideal."""
        if isinstance(other, Polynomial):
            return self.normal_form(other, limits=limits).is_zero()
        return all(self.normal_form(g, limits=limits).is_zero() for g in other.gens)

    def __le__(self, other: "Ideal") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Ideal") -> bool:
        return self.contains(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner() == other.groebner()

    __hash__ = None  # identity is semantic; use canonical_key() for tables

    def canonical_key(self) -> tuple:
        """Hashable identity: the reduced basis under the ring order."""
        return tuple(g.key() for g in self.groebner())

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self, limits: Limits | None = None) -> bool:
        return self.groebner(limits=limits) == (self.ring.one(),)

    # ideal arithmetic

    def __add__(self, other: "Ideal") -> "Ideal":
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, (other,))
        if self.ring != other.ring:
            raise SetupError("ideals from different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other) -> "Ideal":
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, (other,))
        if self.ring != other.ring:
            raise SetupError("ideals from different rings")
        prods = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.ring, prods)

    def intersect(self, other: "Ideal", limits: Limits | None = None) -> "Ideal":
        """Intersection via one auxiliary variable in an elimination order."""
        ring = self.ring
        if self.ring != other.ring:
            raise SetupError("ideals from different rings")
        if self.is_zero() or other.is_zero():
            return Ideal(ring, ())
        if self.is_unit(limits):
            return other
        if other.is_unit(limits):
            return self
        ext = ring.extend_front(("@t",))
        t = ext.gen("@t")
        onemt = ext.one() - t
        gens2 = [t * _lift_front(ext, g) for g in self.gens]
        gens2 += [onemt * _lift_front(ext, g) for g in other.gens]
        gb = buchberger(ext, gens2, ext.order, limits)
        kept = [_drop_front(ring, g) for g in gb if not g.exps[:, 0].any()]
        if ring.order.kind == "grevlex":
            # the elimination block restricted away, what is left is the
            # reduced grevlex basis of the intersection
            return Ideal._from_reduced_gb(ring, tuple(kept))
        return Ideal(ring, kept)

    def colon(self, other, limits: Limits | None = None) -> "Ideal":
        """Colon ideal (self : other) for a polynomial or an ideal."""
        ring = self.ring
        if isinstance(other, Ideal):
            if other.is_zero():
                return Ideal(ring, (ring.one(),))
            result = None
            for g in other.gens:
                piece = self.colon(g, limits)
                result = piece if result is None else result.intersect(piece, limits)
            return result
        g = other
        if g.is_zero():
            return Ideal(ring, (ring.one(),))
        if self.is_zero():
            return self
        inter = self.intersect(Ideal(ring, (g,)), limits)
        return Ideal(ring, [divexact(f, g) for f in inter.gens])

    def dim(self, limits: Limits | None = None) -> int:
        """Krull dimension of R/I; nvars for the zero ideal, -1 for the unit."""
        if self._dim is not None:
            return self._dim
        gb = self.groebner(limits=limits)
        n = self.ring.nvars
        if not gb:
            self._dim = n
            return n
        if gb == (self.ring.one(),):
            self._dim = -1
            return -1
        supports = {frozenset(np.flatnonzero(g.exps[0]).tolist()) for g in gb}
        for size in range(n, -1, -1):
            for combo in itertools.combinations(range(n), size):
                s = set(combo)
                if not any(supp <= s for supp in supports):
                    self._dim = size
                    return size
        self._dim = -1
        return -1


def _lift_front(ext: Ring, f: Polynomial) -> Polynomial:
    pad = np.zeros((f.exps.shape[0], ext.nvars - f.exps.shape[1]), dtype=np.int64)
    exps = np.hstack((pad, f.exps))
    return ext.make_poly(exps, f.coeffs)


def _drop_front(ring: Ring, f: Polynomial) -> Polynomial:
    exps = f.exps[:, f.exps.shape[1] - ring.nvars :]
    return ring.make_poly(exps, f.coeffs)
