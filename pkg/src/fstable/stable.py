"""Shared engine for families of Frobenius-stable ideals.

A stable system is a pair (multiplier, floor): ideals I containing the
floor are members when multiplier * I lands in the bracket power I^[p].
The complete-intersection setup instantiates it with multiplier
u^(p-1) and floor uR; the Gorenstein setup with its epsilon element and
the stabilized colon ideal as floor. On top of membership the engine
builds star closures (the least member containing a seed), the nilpotency
chain, pool-driven enumeration closed under sums and intersections, the
parameter test ideal, and the F-rationality report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import config
from .errors import ResourceLimitError, SetupError
from .frobenius import bracket_power, frobenius_root
from .groebner import DEFAULT_LIMITS, Ideal, Limits
from .ring import Polynomial, Ring


class NilStatus(Enum):
    NILPOTENT = "nilpotent"
    NOT_NILPOTENT = "not-nilpotent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Membership:
    """Membership verdict for one ideal (normalized to contain the floor).

    witness is None for members; otherwise the first generator g, in the
    deterministic generator order of the normalized ideal, whose product
    with the multiplier has a nonzero remainder, together with that
    remainder.
    """

    ideal: Ideal
    member: bool
    witness: tuple[Polynomial, Polynomial] | None
    extended: bool


@dataclass(frozen=True)
class Nilpotency:
    """Nilpotency verdict with the witness chain W_1, W_2, ...

    stabilized records whether the chain provably froze (the
    not-nilpotent case); ascending records whether the computed chain was
    ascending, which holds in the classical situations but is not a
    theorem in general. rechecked is True when a nilpotent verdict was
    confirmed by the direct power-membership containment, None when that
    recheck was skipped because the dense power would be too large.
    """

    status: NilStatus
    exponent: int | None
    chain: tuple[Ideal, ...]
    stabilized: bool
    ascending: bool
    rechecked: bool | None


@dataclass(frozen=True)
class MemberRecord:
    ideal: Ideal
    height: int
    nilpotency: Nilpotency | None


@dataclass(frozen=True)
class Enumeration:
    """Pool-closed member family; complete only relative to the pool."""

    members: tuple[MemberRecord, ...]
    pool: tuple[Polynomial, ...]
    pool_label: str


@dataclass(frozen=True)
class TestIdealResult:
    """Intersection of the proper positive-height members found.

    vacuous is True when no proper positive-height member exists in the
    enumeration, in which case the intersection is the unit ideal and the
    result says nothing about the ring.
    """

    ideal: Ideal
    vacuous: bool
    positive_count: int
    enumeration: Enumeration


@dataclass(frozen=True)
class FRationalReport:
    """F-rationality is decided negatively by a witness member; a positive
    answer is only ever relative to the generator pool."""

    f_rational_relative: bool
    witness: Ideal | None
    enumeration: Enumeration


def _interreduce(ideal: Ideal, limits: Limits) -> Ideal:
    gb = ideal.groebner(limits=limits)
    return Ideal._from_reduced_gb(ideal.ring, gb)


def pool_vars(ring: Ring) -> tuple[Polynomial, ...]:
    """The ambient variables, the default seed pool."""
    return ring.gens()


def pool_linear(ring: Ring) -> tuple[Polynomial, ...]:
    """All nonzero linear forms up to scalar, one representative each
    (leading coefficient 1). Guarded by p^nvars <= 10^4."""
    p, n = ring.p, ring.nvars
    if p**n > 10_000:
        raise SetupError(
            f"linear pool needs p^nvars <= 10000, got {p}^{n} = {p ** n}"
        )
    out = []
    exps = np.eye(n, dtype=np.int64)
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            coeffs = [0] * n
            coeffs[lead] = 1
            for j, c in enumerate(tail):
                coeffs[lead + 1 + j] = c
            out.append(ring.make_poly(exps, coeffs))
    return tuple(out)


class StableSystem:
    """Membership, closure, chain, and enumeration machinery for one
    (multiplier, floor) pair."""

    def __init__(self, ring: Ring, multiplier: Polynomial, floor: Ideal,
                 dim_a: int, limits: Limits | None = None):
        if multiplier.is_zero():
            raise SetupError("multiplier must be nonzero")
        self.ring = ring
        self.multiplier = multiplier
        self.floor = floor
        self.dim_a = dim_a
        self.limits = limits if limits is not None else DEFAULT_LIMITS

    # basic operations

    def normalize(self, ideal: Ideal) -> Ideal:
        """The ideal plus the floor, interreduced."""
        return _interreduce(ideal + self.floor, self.limits)

    def membership(self, ideal: Ideal) -> Membership:
        lim = self.limits
        normalized = self.normalize(ideal)
        target = bracket_power(normalized, 1)
        member = True
        witness = None
        for g in normalized.gens:
            r = target.normal_form(self.multiplier * g, limits=lim)
            if not r.is_zero():
                member = False
                witness = (g, r)
                break
        extended = not ideal.contains(self.floor, lim)
        if config.DEBUG:
            root = frobenius_root(Ideal(self.ring, tuple(self.multiplier * g for g in normalized.gens)), 1)
            via_root = normalized.contains(root, lim)
            if via_root != member:
                raise AssertionError("membership routes disagree (bracket vs root form)")
        return Membership(normalized, member, witness, extended)

    def star_closure(self, seed: Ideal, max_rounds: int | None = None) -> Ideal:
        """Least member containing the seed: iterate
        J -> J + root_1(multiplier * J) to its fixed point."""
        lim = self.limits
        rounds = max_rounds if max_rounds is not None else lim.max_rounds
        current = self.normalize(seed)
        for _ in range(rounds):
            grown = frobenius_root(
                Ideal(self.ring, tuple(self.multiplier * g for g in current.gens)), 1
            )
            if current.contains(grown, lim):
                return current
            current = _interreduce(current + grown, lim)
        raise ResourceLimitError(
            f"star closure did not stabilize within {rounds} rounds", partial=current
        )

    # nilpotency chain: W_1 = root_1((multiplier)), W_(e+1) = root_1(multiplier * W_e)

    def _chain_step(self, w: Ideal) -> Ideal:
        return _interreduce(
            frobenius_root(Ideal(self.ring, tuple(self.multiplier * g for g in w.gens)), 1),
            self.limits,
        )

    def w1(self) -> Ideal:
        return _interreduce(
            frobenius_root(Ideal(self.ring, (self.multiplier,)), 1), self.limits
        )

    def nilpotency(self, ideal: Ideal, e_max: int | None = None) -> Nilpotency:
        lim = self.limits
        e_max = e_max if e_max is not None else lim.e_max
        if e_max < 1:
            raise SetupError("nilpotency needs e_max >= 1")
        target = self.normalize(ideal)
        chain: list[Ideal] = [self.w1()]
        status = NilStatus.INCONCLUSIVE
        exponent: int | None = None
        stabilized = False
        for e in range(1, e_max + 1):
            w = chain[-1]
            if target.contains(w, lim):
                status = NilStatus.NILPOTENT
                exponent = e
                break
            if e == e_max:
                exponent = e_max
                break
            nxt = self._chain_step(w)
            if nxt == w:
                # frozen chain; confirm with the bracketed step before
                # declaring the family genuinely non-nilpotent
                confirm = _interreduce(
                    frobenius_root(
                        Ideal(self.ring, tuple(self.multiplier * g for g in bracket_power(w, 1).gens)), 1
                    ),
                    lim,
                )
                if confirm == w:
                    status = NilStatus.NOT_NILPOTENT
                    stabilized = True
                    break
            chain.append(nxt)
        ascending = all(b.contains(a, lim) for a, b in zip(chain, chain[1:]))
        rechecked = None
        if status is NilStatus.NILPOTENT:
            rechecked = self._recheck_nilpotent(target, exponent)
        return Nilpotency(status, exponent, tuple(chain), stabilized, ascending, rechecked)

    def _recheck_nilpotent(self, target: Ideal, e: int) -> bool | None:
        p = self.ring.p
        s = (p**e - 1) // (p - 1)
        deg = self.multiplier.total_degree()
        if deg * s > 2000:
            return None
        power = self.multiplier**s
        ok = bracket_power(target, e).contains(power, self.limits)
        if not ok:
            raise AssertionError("nilpotency chain and direct power containment disagree")
        return True

    # enumeration

    def enumerate_members(self, pool=None, pool_label: str = "",
                          with_nilpotency: bool = False) -> Enumeration:
        if pool is None:
            pool = pool_vars(self.ring)
            pool_label = pool_label or "vars"
        lim = self.limits
        found: dict[tuple, Ideal] = {}
        todo: list[Ideal] = []

        def add(candidate: Ideal):
            key = candidate.canonical_key()
            if key not in found:
                if len(found) >= lim.max_members:
                    raise ResourceLimitError(
                        f"enumeration exceeded max_members={lim.max_members}",
                        partial=tuple(found.values()),
                    )
                found[key] = candidate
                todo.append(candidate)

        bottom = self.star_closure(Ideal(self.ring, ()))
        add(bottom)
        add(_interreduce(Ideal(self.ring, (self.ring.one(),)), lim))
        for f in pool:
            add(self.star_closure(bottom + f))
        done: list[Ideal] = []
        while todo:
            current = todo.pop(0)
            for other in done:
                add(self.star_closure(current + other))
                add(self.star_closure(current.intersect(other, lim)))
            done.append(current)
        records = []
        for ideal in found.values():
            height = self.dim_a - ideal.dim(lim)
            nil = self.nilpotency(ideal) if with_nilpotency else None
            records.append(MemberRecord(ideal, height, nil))
        records.sort(key=lambda r: str(r.ideal))
        return Enumeration(tuple(records), tuple(pool), pool_label)

    def parameter_test_ideal(self, pool=None, pool_label: str = "") -> TestIdealResult:
        lim = self.limits
        enum = self.enumerate_members(pool, pool_label)
        positives = [
            r for r in enum.members
            if r.height > 0 and not r.ideal.is_unit(lim)
        ]
        if not positives:
            unit = _interreduce(Ideal(self.ring, (self.ring.one(),)), lim)
            return TestIdealResult(unit, True, 0, enum)
        tau = positives[0].ideal
        for r in positives[1:]:
            tau = _interreduce(tau.intersect(r.ideal, lim), lim)
        if not any(r.ideal == tau for r in positives):
            raise AssertionError(
                "test ideal fell outside the enumerated members; "
                "the pairwise closure should contain every intersection"
            )
        return TestIdealResult(tau, False, len(positives), enum)

    def f_rational_report(self, pool=None, pool_label: str = "") -> FRationalReport:
        lim = self.limits
        enum = self.enumerate_members(pool, pool_label)
        bottom_key = self.star_closure(Ideal(self.ring, ())).canonical_key()
        unit_key = _interreduce(Ideal(self.ring, (self.ring.one(),)), lim).canonical_key()
        for r in enum.members:
            key = r.ideal.canonical_key()
            if key != bottom_key and key != unit_key:
                return FRationalReport(False, r.ideal, enum)
        return FRationalReport(True, None, enum)
