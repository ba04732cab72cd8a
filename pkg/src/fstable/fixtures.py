"""Bundled reproduction fixtures.

Each fixture re-runs one of the worked examples the library is validated
against and compares the computed objects with the pinned expected
values. The CLI's ``reproduce-paper`` subcommand prints one PASS/FAIL
line per claim; the acceptance test suite asserts the same claims.

Expected values are stored as canonical generator strings and parsed
into the fixture's own ring, so every comparison is an ideal-level
equality through reduced Groebner bases, not a string match (except
where a claim pins the reduced basis itself).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .ci import CISetup
from .errors import FstableError
from .frobenius import bracket_power, frobenius_root
from .gorenstein import GorSetup, compute_k_ideal
from .groebner import Ideal, Limits
from .ring import Ring
from .stable import NilStatus, pool_linear

EX1_U = "x*y"
EX1_LATTICE = (("x*y",), ("x",), ("y",), ("x", "y"), ("1",))
EX1_TEST_IDEAL = ("x", "y")
EX1_PRIMES = (2, 3, 5)

EX2_U = "x^2*y + x*y*z + z^3"
EX2_MEMBERS = (("x", "z"), ("x", "y", "z"))
EX2_TEST_IDEAL = ("x", "z")
EX2_CONSISTENCY_PRIMES = (3, 5)

EX3_U = "x^3 + y^3 + z^3 + x*y*z"
EX3_FACTOR_Q = "x^2 + y^2 + z^2 + x*y + x*z + y*z"
EX3_MEMBERS = (
    (EX3_U,),
    ("x + y + z",),
    (EX3_FACTOR_Q,),
    ("x + z", "y + z"),
    ("x + y + z", "y^2 + y*z + z^2"),
    ("x", "y", "z"),
)
EX3_HEIGHTS = (0, 0, 0, 1, 1, 2)
# reduced grevlex basis of the intersection of the two height-1 members;
# also the Jacobian ideal of u, which cuts out the singular locus
EX3_TEST_IDEAL = ("x^2 + y*z", "x*y + z^2", "y^2 + x*z")

REMARK_VARS = ("x", "y", "a", "b")
REMARK_U = "x^2*a - y^2*b"
REMARK_MEMBER = ("x", "y", "a^2")


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str = ""


def _claim(out: list[FixtureResult], name: str, ok: bool, detail: str = ""):
    out.append(FixtureResult(name, bool(ok), detail))


def _gb_strings(ideal: Ideal) -> tuple[str, ...]:
    return tuple(str(g) for g in ideal.groebner())


def _lattice_keys(records) -> set:
    return {r.ideal.canonical_key() for r in records}


def _expected_keys(ring: Ring, lattice) -> set:
    return {Ideal(ring, gens).canonical_key() for gens in lattice}


def example1(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    for p in EX1_PRIMES:
        ring = Ring(p, ("x", "y"))
        setup = CISetup(ring, [EX1_U], limits=limits)
        _claim(out, f"example-1 p={p} f-pure", setup.is_f_pure())
        enum = setup.enumerate_members(pool_label="vars")
        got = _lattice_keys(enum.members)
        want = _expected_keys(ring, EX1_LATTICE)
        _claim(out, f"example-1 p={p} lattice", got == want,
               f"{len(enum.members)} members")
        tau = setup.parameter_test_ideal()
        _claim(out, f"example-1 p={p} test-ideal",
               tau.ideal == Ideal(ring, EX1_TEST_IDEAL), str(tau.ideal))
    return out


def example2(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    ring = Ring(2, ("x", "y", "z"))
    setup = CISetup(ring, [EX2_U], limits=limits)
    _claim(out, "example-2 p=2 f-pure", setup.is_f_pure())
    for gens in EX2_MEMBERS:
        verdict = setup.membership(Ideal(ring, gens))
        _claim(out, f"example-2 p=2 member ({', '.join(gens)})", verdict.member)
    tau = setup.parameter_test_ideal()
    _claim(out, "example-2 p=2 test-ideal",
           tau.ideal == Ideal(ring, EX2_TEST_IDEAL), str(tau.ideal))
    for p in EX2_CONSISTENCY_PRIMES:
        ring = Ring(p, ("x", "y", "z"))
        setup = CISetup(ring, [EX2_U], limits=limits)
        _claim(out, f"example-2 p={p} f-pure (consistency)", setup.is_f_pure())
        verdict = setup.membership(Ideal(ring, ("x", "z")))
        _claim(out, f"example-2 p={p} member (x, z) (consistency)", verdict.member)
    return out


def _example3_setup(limits: Limits | None = None):
    ring = Ring(2, ("x", "y", "z"))
    setup = CISetup(ring, [EX3_U], limits=limits)
    pool = list(pool_linear(ring)) + [ring.parse(EX3_FACTOR_Q)]
    return ring, setup, pool


def example3(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    ring, setup, pool = _example3_setup(limits)
    for gens, height in zip(EX3_MEMBERS, EX3_HEIGHTS):
        ideal = Ideal(ring, gens)
        verdict = setup.membership(ideal)
        label = ", ".join(gens)
        _claim(out, f"example-3 member ({label})", verdict.member)
        _claim(out, f"example-3 height ({label})",
               setup.height(ideal) == height, f"expected {height}")
    d = Ideal(ring, EX3_MEMBERS[3])
    e = Ideal(ring, EX3_MEMBERS[4])
    crossing = d.intersect(e, setup.limits)
    expected = Ideal(ring, EX3_TEST_IDEAL)
    _claim(out, "example-3 intersection of height-1 members",
           crossing == expected and _gb_strings(crossing) == _gb_strings(expected),
           " , ".join(_gb_strings(crossing)))
    tau = setup.parameter_test_ideal(pool=pool, pool_label="linear+factor")
    _claim(out, "example-3 test-ideal", tau.ideal == expected, str(tau.ideal))
    members = setup.enumerate_members(pool=pool, pool_label="linear+factor")
    keys = _lattice_keys(members.members)
    listed = _expected_keys(ring, EX3_MEMBERS)
    _claim(out, "example-3 lattice contains all listed members",
           listed <= keys, f"{len(members.members)} members enumerated")
    return out


def remark(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    ring = Ring(2, REMARK_VARS)
    setup = CISetup(ring, [REMARK_U], limits=limits)
    verdict = setup.membership(Ideal(ring, REMARK_MEMBER))
    _claim(out, "remark member (x, y, a^2)", verdict.member)
    return out


def nilpotency(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    ring = Ring(2, ("x",))
    setup = CISetup(ring, ["x^2"], limits=limits)
    verdict = setup.nilpotency(Ideal(ring, ("x",)))
    _claim(out, "nilpotency u=x^2 L=(x)",
           verdict.status is NilStatus.NILPOTENT and verdict.exponent == 1
           and verdict.rechecked,
           f"{verdict.status.value}({verdict.exponent})")

    for label, builder in (("example-2 p=2", _example2_members),
                           ("example-3", _example3_members)):
        setup, records = builder(limits)
        for record in records:
            if record.ideal.is_unit(setup.limits):
                continue
            nil = record.nilpotency
            ok = (nil is not None
                  and nil.status is NilStatus.NOT_NILPOTENT
                  and nil.chain and nil.chain[0].is_unit(setup.limits))
            _claim(out, f"nilpotency {label} proper member {record.ideal}",
                   ok, "W_1 = R and not nilpotent")
    return out


def _example2_members(limits):
    ring = Ring(2, ("x", "y", "z"))
    setup = CISetup(ring, [EX2_U], limits=limits)
    return setup, setup.enumerate_members(pool_label="vars").members


def _example3_members(limits):
    ring, setup, pool = _example3_setup(limits)
    return setup, setup.enumerate_members(pool=pool, pool_label="linear+factor").members


def _recast(out, label, p, names, u_str, pool_gens, limits):
    ring = Ring(p, names)
    ci = CISetup(ring, [u_str], limits=limits)
    epsilon = ring.parse(u_str) ** (p - 1)
    k_ideal, chain = compute_k_ideal(ring, ci.u_ideal, epsilon, ci.limits)
    _claim(out, f"gorenstein {label} K_u = (u)",
           k_ideal == Ideal(ring, (u_str,)), f"chain length {len(chain)}")
    gor = GorSetup(ring, [u_str], epsilon, limits=limits)
    pool = [ring.parse(g) for g in pool_gens] if pool_gens else None
    e_ci = ci.enumerate_members(pool=pool)
    e_gor = gor.enumerate_members(pool=pool)
    same_lattice = _lattice_keys(e_ci.members) == _lattice_keys(e_gor.members)
    same_heights = (
        sorted((r.ideal.canonical_key(), r.height) for r in e_ci.members)
        == sorted((r.ideal.canonical_key(), r.height) for r in e_gor.members))
    _claim(out, f"gorenstein {label} lattice agrees", same_lattice and same_heights,
           f"{len(e_ci.members)} members")
    t_ci = ci.parameter_test_ideal(pool=pool)
    t_gor = gor.parameter_test_ideal(pool=pool)
    _claim(out, f"gorenstein {label} test-ideal agrees",
           t_ci.ideal == t_gor.ideal, str(t_gor.ideal))


def gorenstein(limits: Limits | None = None) -> list[FixtureResult]:
    out: list[FixtureResult] = []
    for p in EX1_PRIMES:
        _recast(out, f"example-1 p={p}", p, ("x", "y"), EX1_U, None, limits)
    for p in (2,) + EX2_CONSISTENCY_PRIMES:
        _recast(out, f"example-2 p={p}", p, ("x", "y", "z"), EX2_U, None, limits)
    ring = Ring(2, ("x", "y", "z"))
    pool_gens = [str(f) for f in pool_linear(ring)] + [EX3_FACTOR_Q]
    _recast(out, "example-3", 2, ("x", "y", "z"), EX3_U, pool_gens, limits)
    return out


def _random_poly(rng: random.Random, ring: Ring, max_terms: int, max_deg: int):
    n = ring.nvars
    rows = []
    coeffs = []
    for _ in range(rng.randint(1, max_terms)):
        while True:
            row = [rng.randint(0, max_deg) for _ in range(n)]
            if sum(row) <= max_deg:
                break
        rows.append(row)
        coeffs.append(rng.randint(1, ring.p - 1))
    return ring.make_poly(np.array(rows, dtype=np.int64),
                          np.array(coeffs, dtype=np.int64))


def random_adjunction(seed: int = 0, cases: int = 20,
                      limits: Limits | None = None) -> list[FixtureResult]:
    """Seeded spot check: root_e(I^[p^e]) = I and bracket additivity."""
    out: list[FixtureResult] = []
    rng = random.Random(seed)
    failures = []
    for index in range(cases):
        p = rng.choice((2, 3))
        ring = Ring(p, ("x", "y"))
        e = rng.choice((1, 2))
        gens = [_random_poly(rng, ring, 3, 3) for _ in range(rng.randint(1, 2))]
        ideal = Ideal(ring, gens)
        if frobenius_root(bracket_power(ideal, e), e) != ideal:
            failures.append(f"case {index}: adjunction")
        other = Ideal(ring, [_random_poly(rng, ring, 3, 3)])
        lhs = bracket_power(ideal + other, 1)
        rhs = bracket_power(ideal, 1) + bracket_power(other, 1)
        if lhs != rhs:
            failures.append(f"case {index}: bracket additivity")
    _claim(out, f"random-adjunction seed={seed}", not failures,
           f"{cases - len(failures)}/{cases} cases" + (
               "; " + "; ".join(failures[:3]) if failures else ""))
    return out


FIXTURES = (
    ("example-1", example1),
    ("example-2", example2),
    ("example-3", example3),
    ("remark", remark),
    ("nilpotency", nilpotency),
    ("gorenstein", gorenstein),
)


def run_all(seed: int = 0, limits: Limits | None = None) -> list[FixtureResult]:
    """Run every fixture; a crashed fixture group becomes one FAIL entry."""
    out: list[FixtureResult] = []
    for name, func in FIXTURES:
        try:
            out.extend(func(limits))
        except FstableError as exc:
            out.append(FixtureResult(f"{name} (crashed)", False, str(exc)))
    out.extend(random_adjunction(seed=seed, limits=limits))
    return out
