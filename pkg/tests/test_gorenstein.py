"""Gorenstein setups: the stabilized floor K_u, agreement with the
complete-intersection machinery on recast setups, and validation."""

import pytest

from fstable import (
    CISetup,
    GorSetup,
    Ideal,
    Limits,
    ResourceLimitError,
    Ring,
    SetupError,
    compute_k_ideal,
)

R2 = Ring(2, ("x", "y"))


def recast(ci: CISetup) -> GorSetup:
    """The Gorenstein presentation of a complete-intersection setup."""
    return GorSetup(ci.ring, ci.u_gens, ci.multiplier, ci.limits)


class TestKIdeal:
    def test_hypersurface_floor_is_u(self):
        # principal case: K_u = (u), reached after one repeat
        setup = GorSetup(R2, ("x*y",), "x*y")
        assert setup.k_ideal == Ideal(R2, ("x*y",))
        assert len(setup.k_chain) == 2

    def test_chain_is_ascending_and_ends_at_k(self):
        ring = Ring(3, ("x", "y", "z"))
        u = "x^2*y + x*y*z + z^3"
        eps = str(ring.parse(u) ** 2)  # u^(p-1)
        setup = GorSetup(ring, (u,), eps)
        for a, b in zip(setup.k_chain, setup.k_chain[1:]):
            assert b.contains(a)
        assert setup.k_chain[-1] == setup.k_ideal

    def test_invalid_epsilon_rejected(self):
        # epsilon = u at p = 3 makes the colon chain descend, which no
        # genuine Frobenius action allows; the setup must be refused
        ring = Ring(3, ("x", "y", "z"))
        u = "x^2*y + x*y*z + z^3"
        with pytest.raises(SetupError):
            GorSetup(ring, (u,), u)

    def test_complete_intersection_floor_is_u(self):
        ring = Ring(2, ("x", "y", "z", "w"))
        ci = CISetup(ring, ("x*y", "z*w"))
        gor = recast(ci)
        assert gor.k_ideal == ci.u_ideal

    def test_compute_k_ideal_function(self):
        k, chain = compute_k_ideal(R2, Ideal(R2, ("x*y",)), R2.parse("x*y"))
        assert k == Ideal(R2, ("x*y",))
        assert chain[-1] == k

    def test_e_cap_raises_with_partial_chain(self):
        with pytest.raises(ResourceLimitError) as info:
            GorSetup(R2, ("x*y",), "x*y", Limits(e_max=0))
        assert len(info.value.partial) == 1


class TestRecastAgreement:
    """With epsilon = u^(p-1) the Gorenstein family must reproduce the
    complete-intersection family exactly."""

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_node_family_matches(self, p):
        ring = Ring(p, ("x", "y"))
        ci = CISetup(ring, ("x*y",))
        gor = recast(ci)
        ci_enum = ci.enumerate_members()
        gor_enum = gor.enumerate_members()
        assert [str(r.ideal) for r in ci_enum.members] == [
            str(r.ideal) for r in gor_enum.members
        ]
        assert [r.height for r in ci_enum.members] == [
            r.height for r in gor_enum.members
        ]

    def test_membership_verdicts_match(self):
        ring = Ring(2, ("x", "y", "z"))
        ci = CISetup(ring, ("x^2*y + x*y*z + z^3",))
        gor = recast(ci)
        for gens in (("x", "z"), ("x", "y", "z"), ("x",), ("x + y", "z")):
            ideal = Ideal(ring, gens)
            assert ci.membership(ideal).member == gor.membership(ideal).member

    def test_test_ideals_match(self):
        ring = Ring(2, ("x", "y", "z"))
        ci = CISetup(ring, ("x^2*y + x*y*z + z^3",))
        gor = recast(ci)
        a = ci.parameter_test_ideal()
        b = gor.parameter_test_ideal()
        assert a.ideal == b.ideal
        assert a.positive_count == b.positive_count

    def test_f_rational_flags_match(self):
        ring = Ring(5, ("x", "y"))
        ci = CISetup(ring, ("x*y",))
        gor = recast(ci)
        a = ci.f_rational_report()
        b = gor.f_rational_report()
        assert a.f_rational_relative == b.f_rational_relative


class TestGorensteinSpecifics:
    def test_star_closure_above_k(self):
        setup = GorSetup(R2, ("x*y",), "x*y")
        closed = setup.star_closure(Ideal(R2, ("x + y",)))
        assert closed == Ideal(R2, ("x", "y"))
        assert setup.membership(closed).member

    def test_unrelated_epsilon_changes_family(self):
        # with epsilon = u^2 instead of u = u^(p-1) the floor grows:
        # K_u strictly contains (u) here
        setup = GorSetup(R2, ("x*y",), "x^2*y^2")
        assert setup.k_ideal.contains(Ideal(R2, ("x*y",)))
        assert setup.k_ideal != Ideal(R2, ("x*y",))

    def test_heights_measured_against_quotient(self):
        setup = GorSetup(R2, ("x*y",), "x*y")
        assert setup.dim_a == 1
        assert setup.height(Ideal(R2, ("x", "y"))) == 1
        assert setup.height(Ideal(R2, ("1",))) == setup.dim_a + 1

    def test_delta_records_codimension(self):
        ring = Ring(2, ("x", "y", "z", "w"))
        setup = GorSetup(ring, ("x*y", "z*w"), "x*y*z*w")
        assert setup.delta == 2


class TestValidation:
    def test_zero_epsilon_rejected(self):
        with pytest.raises(SetupError):
            GorSetup(R2, ("x*y",), "0")

    def test_zero_u_rejected(self):
        with pytest.raises(SetupError):
            GorSetup(R2, ("0",), "x")

    def test_unit_u_rejected(self):
        with pytest.raises(SetupError):
            GorSetup(R2, ("x + 1",), "x")

    def test_empty_u_rejected(self):
        with pytest.raises(SetupError):
            GorSetup(R2, (), "x")
