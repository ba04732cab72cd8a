"""Acceptance gate: the eight headline criteria, one printed verdict
line each. Run with -s (the default addopts) to see the lines."""

import itertools

from fstable import CISetup, Ideal, Ring, in_script_I
from fstable import fixtures

import test_properties
from reference import RefPoly, ref_membership


def _report(number, label, body):
    try:
        body()
    except BaseException as exc:
        print(f"FAIL criterion {number}: {label} [{type(exc).__name__}: {exc}]")
        raise
    print(f"PASS criterion {number}: {label}")


def _assert_group(results):
    failed = [r for r in results if not r.passed]
    assert not failed, "; ".join(f"{r.name}: {r.detail}" for r in failed)


def test_criterion_1_node_lattice():
    _report(
        1,
        "u = xy lattice is {(xy), (x), (y), (x,y), R} for p in {2, 3, 5}",
        lambda: _assert_group(fixtures.example1()),
    )


def test_criterion_2_cone_test_ideal():
    _report(
        2,
        "u = x^2y + xyz + z^3 at p = 2: F-pure, members, test ideal (x, z)",
        lambda: _assert_group(fixtures.example2()),
    )


def test_criterion_3_cubic_cone():
    _report(
        3,
        "u = x^3 + y^3 + z^3 + xyz at p = 2: six members, heights, "
        "test ideal = the intersection of the height-1 members",
        lambda: _assert_group(fixtures.example3()),
    )


def test_criterion_4_four_variable_membership():
    _report(
        4,
        "u = x^2a - y^2b at p = 2: (x, y, a^2) is a member",
        lambda: _assert_group(fixtures.remark()),
    )


def test_criterion_5_nilpotency():
    _report(
        5,
        "u = x^2, L = (x) is nilpotent at e = 1; F-pure setups have no "
        "nilpotent proper members and W_1 = R",
        lambda: _assert_group(fixtures.nilpotency()),
    )


def test_criterion_6_gorenstein_agreement():
    _report(
        6,
        "Gorenstein recasts with epsilon = u^(p-1) reproduce the "
        "complete-intersection verdicts and K_u = (u)",
        lambda: _assert_group(fixtures.gorenstein()),
    )


def test_criterion_7_property_suites():
    def body():
        test_properties.TestAdjunction().test_root_bracket_galois_correspondence()
        test_properties.TestBracketFlatness().test_bracket_commutes_with_sum_product_intersection()
        test_properties.TestRootInversion().test_root_of_bracket_is_identity()
        test_properties.TestMembershipOracle().test_membership_agrees_with_macaulay()
        test_properties.TestClosureIdempotence().test_star_closure_is_idempotent()
        closure = test_properties.TestFamilyClosure()
        closure.test_pairwise_closed(2, ("x", "y"), "x*y", "vars")
        closure.test_pairwise_closed(2, ("x", "y", "z"), fixtures.EX2_U, "vars")
        closure.test_pairwise_closed(2, ("x", "y", "z"), fixtures.EX3_U, "linear+q")

    _report(
        7,
        "500 seeded cases per identity (adjunction, flatness, root "
        "inversion, Macaulay oracle, closure idempotence, family closure)",
        body,
    )


def test_criterion_8_exhaustive_micro_oracle():
    def body():
        ring = Ring(2, ("x", "y"))
        setup = CISetup(ring, ("x*y",))
        u_ref = RefPoly.from_poly(setup.u_gens[0])
        candidates = [ring.parse(t) for t in ("x", "y", "x + y", "x*y")]
        for size in range(len(candidates) + 1):
            for subset in itertools.combinations(candidates, size):
                ideal = Ideal(ring, subset)
                library = in_script_I(setup, ideal).member
                oracle = ref_membership(u_ref, [RefPoly.from_poly(g) for g in subset])
                normalized = setup.system.normalize(ideal)
                via_star = setup.star_closure(normalized) == normalized
                assert library == oracle == via_star, \
                    ([str(g) for g in subset], library, oracle, via_star)

    _report(
        8,
        "all 16 subsets of {x, y, x+y, xy} agree with the Macaulay "
        "micro-oracle and the star fixed-point route",
        body,
    )
