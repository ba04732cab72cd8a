"""Functional facade over the setup objects.

Every operation here is a thin delegate to a CISetup or GorSetup method;
callers who prefer free functions over methods (scripts, notebooks, the
test oracles) can use these names directly. "script I" is the family
of ideals defining F-stable submodules, written with a script letter in
the mathematical notation.
"""

from __future__ import annotations

from .ci import CISetup
from .gorenstein import GorSetup, compute_k_ideal
from .groebner import Ideal
from .stable import (
    Enumeration,
    FRationalReport,
    Membership,
    Nilpotency,
    TestIdealResult,
)

__all__ = [
    "in_script_I",
    "in_script_I0",
    "star_closure",
    "height_in_A",
    "enumerate_script_I",
    "parameter_test_ideal",
    "is_F_rational_report",
    "compute_K_u",
    "in_script_I_gor",
    "star_closure_gor",
    "parameter_test_ideal_gor",
]


def in_script_I(setup: CISetup, ideal: Ideal) -> Membership:
    """Membership of the (normalized) ideal in the stable family."""
    return setup.membership(ideal)


def in_script_I0(setup: CISetup, ideal: Ideal, e_max: int | None = None) -> Nilpotency:
    """Nilpotency verdict for a member of the stable family."""
    return setup.nilpotency(ideal, e_max)


def star_closure(setup: CISetup, seed: Ideal, max_rounds: int | None = None) -> Ideal:
    """Smallest member containing the seed."""
    return setup.star_closure(seed, max_rounds)


def height_in_A(setup: CISetup, ideal: Ideal) -> int:
    """Height of the image of the ideal in the quotient."""
    return setup.height(ideal)


def enumerate_script_I(setup: CISetup, pool=None, pool_label: str = "") -> Enumeration:
    """Members reachable from the pool, closed under sum and intersection."""
    return setup.enumerate_members(pool, pool_label)


def parameter_test_ideal(setup, pool=None, pool_label: str = "") -> TestIdealResult:
    """Intersection of the proper positive-height members."""
    return setup.parameter_test_ideal(pool, pool_label)


def is_F_rational_report(setup, pool=None, pool_label: str = "") -> FRationalReport:
    """F-rationality verdict, definitive only in the negative."""
    return setup.f_rational_report(pool, pool_label)


def compute_K_u(setup: GorSetup, e_max: int | None = None) -> Ideal:
    """The stabilized floor ideal of a Gorenstein setup."""
    if e_max is None:
        return setup.k_ideal
    from dataclasses import replace

    limits = replace(setup.limits, e_max=e_max)
    k, _ = compute_k_ideal(setup.ring, setup.u_ideal, setup.epsilon, limits)
    return k


def in_script_I_gor(setup: GorSetup, ideal: Ideal) -> Membership:
    """Membership in the Gorenstein family (floor K_u)."""
    return setup.membership(ideal)


def star_closure_gor(setup: GorSetup, seed: Ideal, max_rounds: int | None = None) -> Ideal:
    return setup.star_closure(seed, max_rounds)


def parameter_test_ideal_gor(setup: GorSetup, pool=None, pool_label: str = "") -> TestIdealResult:
    return setup.parameter_test_ideal(pool, pool_label)
