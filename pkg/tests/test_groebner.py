"""Groebner engine tests: frozen bases, the ideal calculus, and random
agreement against the textbook toy implementation in reference.py."""

import numpy as np
import pytest

from fstable import (
    DEFAULT_LIMITS,
    Ideal,
    Limits,
    MonomialOrder,
    ResourceLimitError,
    Ring,
    buchberger,
    divexact,
)

from reference import RefPoly, toy_groebner

R2 = Ring(2, ("x", "y"))
R5 = Ring(5, ("x", "y"))
R7 = Ring(7, ("x", "y", "z"))


def gb_strings(ideal, order=None):
    return [str(g) for g in ideal.groebner(order)]


class TestFrozenBases:
    """Reduced bases pinned to their independently computed values."""

    # twisted cubic: the curve (t, t^2, t^3), generators y - x^2, z - x^3
    def test_twisted_cubic_grevlex(self):
        ideal = Ideal(R7, ("y + 6*x^2", "z + 6*x^3"))
        assert gb_strings(ideal) == ["x^2 + 6*y", "x*y + 6*z", "y^2 + 6*x*z"]

    def test_twisted_cubic_lex(self):
        ring = R7.with_order(MonomialOrder.lex())
        ideal = Ideal(ring, ("y + 6*x^2", "z + 6*x^3"))
        assert gb_strings(ideal) == [
            "x^2 + 6*y",
            "x*y + 6*z",
            "x*z + 6*y^2",
            "y^3 + 6*z^2",
        ]

    def test_monomial_ideal_is_its_own_basis(self):
        ideal = Ideal(R5, ("x^2*y", "x*y^3", "y^4"))
        assert gb_strings(ideal) == ["x*y^3", "y^4", "x^2*y"]

    def test_basis_is_monic_and_descending(self):
        ideal = Ideal(R7, ("3*x^2 + y", "5*y^2 + z"))
        gb = ideal.groebner()
        for g in gb:
            assert int(g.coeffs[0]) == 1
        lms = [tuple(int(e) for e in g.exps[0]) for g in gb]
        keys = [tuple(int(v) for v in R7.order.key(np.array([m]))[0]) for m in lms]
        assert keys == sorted(keys, reverse=True)

    def test_unit_ideal_collapses_to_one(self):
        ideal = Ideal(R5, ("x + 1", "x"))
        assert gb_strings(ideal) == ["1"]

    def test_zero_and_empty(self):
        assert Ideal(R5, ()).groebner() == ()
        assert Ideal(R5, (R5.zero(),)).groebner() == ()


class TestNormalForm:
    def test_reduces_to_zero_inside(self):
        ideal = Ideal(R5, ("x",))
        assert ideal.normal_form(R5.parse("x^2")).is_zero()

    def test_partial_reduction(self):
        ring = Ring(5, ("x", "y", "z"))
        ideal = Ideal(ring, ("x^2", "z^2"))
        assert str(ideal.normal_form(ring.parse("x^2*y + z"))) == "z"

    def test_empty_basis_returns_input(self):
        f = R5.parse("x^3 + y")
        assert Ideal(R5, ()).normal_form(f) == f

    def test_remainder_has_no_reducible_term(self):
        ideal = Ideal(R7, ("x^2 + 6*y", "z + 6*x^3"))
        rem = ideal.normal_form(R7.parse("x^5 + x^2*y^2 + z^3"))
        gb = ideal.groebner()
        lms = np.stack([g.exps[0] for g in gb])
        for row in rem.exps:
            assert not np.any(np.all(lms <= row, axis=1))


class TestMembership:
    def test_socle_monomial_not_in_frobenius_power(self):
        ring = Ring(2, ("x", "y", "z"))
        ideal = Ideal(ring, ("x^2", "y^2", "z^2"))
        assert ring.parse("x*y*z") not in ideal
        assert ring.parse("x^2*y*z") in ideal

    def test_multiples_are_members(self):
        ideal = Ideal(R5, ("x^2",))
        assert R5.parse("x^3*y") in ideal
        assert R5.parse("x") not in ideal

    def test_zero_in_every_ideal(self):
        assert R2.zero() in Ideal(R2, ())
        assert R2.zero() in Ideal(R2, ("x",))

    def test_contains_ideal(self):
        big = Ideal(R5, ("x", "y"))
        assert big.contains(Ideal(R5, ("x^2 + x*y", "y^3")))
        assert not Ideal(R5, ("x",)).contains(big)


class TestCalculus:
    def test_sum(self):
        assert Ideal(R5, ("x",)) + Ideal(R5, ("y",)) == Ideal(R5, ("x", "y"))

    def test_product(self):
        assert Ideal(R5, ("x",)) * Ideal(R5, ("y",)) == Ideal(R5, ("x*y",))
        square = Ideal(R5, ("x", "y")) * Ideal(R5, ("x", "y"))
        assert square == Ideal(R5, ("x^2", "x*y", "y^2"))

    def test_intersect_principal(self):
        meet = Ideal(R5, ("x",)).intersect(Ideal(R5, ("y",)))
        assert meet == Ideal(R5, ("x*y",))

    def test_intersect_with_unit_and_zero(self):
        ideal = Ideal(R5, ("x^2", "y"))
        unit = Ideal(R5, ("1",))
        assert ideal.intersect(unit) == ideal
        assert unit.intersect(ideal) == ideal
        assert Ideal(R5, ()).intersect(ideal).is_zero()

    def test_intersect_commutes_and_lies_inside(self):
        a = Ideal(R7, ("x^2 + y", "z"))
        b = Ideal(R7, ("x + z", "y^2"))
        meet = a.intersect(b)
        assert meet == b.intersect(a)
        assert a.contains(meet) and b.contains(meet)

    def test_colon_by_polynomial(self):
        ideal = Ideal(R5, ("x^2*y",))
        assert ideal.colon(R5.parse("x")) == Ideal(R5, ("x*y",))
        assert Ideal(R5, ("x",)).colon(R5.parse("y")) == Ideal(R5, ("x",))

    def test_colon_recovers_hypersurface(self):
        # (u^q) : u^(q-1) = (u) for u = x, q = p^(e+1)
        for e in (0, 1, 2):
            q = 2 ** (e + 1)
            ideal = Ideal(R2, (f"x^{q}",))
            assert ideal.colon(R2.parse(f"x^{q - 1}")) == Ideal(R2, ("x",))

    def test_colon_by_ideal(self):
        ideal = Ideal(R5, ("x*y",))
        quot = ideal.colon(Ideal(R5, ("x", "y")))
        assert quot == Ideal(R5, ("x*y",))

    def test_colon_by_zero_is_unit(self):
        assert Ideal(R5, ("x",)).colon(R5.zero()).is_unit()

    def test_divexact(self):
        f = R5.parse("x^3*y + 2*x^2*y^2")
        assert str(divexact(f, R5.parse("x^2*y"))) == "x + 2*y"


class TestEquality:
    def test_generator_order_irrelevant(self):
        assert Ideal(R5, ("x", "y")) == Ideal(R5, ("y", "x + y"))

    def test_distinct_ideals_differ(self):
        assert Ideal(R5, ("x",)) != Ideal(R5, ("y",))
        assert Ideal(R5, ("x",)) != Ideal(R5, ("x^2",))

    def test_canonical_key_matches_equality(self):
        a = Ideal(R5, ("x + y", "y"))
        b = Ideal(R5, ("x", "y"))
        assert a.canonical_key() == b.canonical_key()


class TestDimension:
    @pytest.mark.parametrize(
        "gens, expected",
        [
            ((), 3),
            (("x",), 2),
            (("x", "y"), 1),
            (("x", "y", "z"), 0),
            (("x*y",), 2),
            (("x^2",), 2),
            (("x + 1", "x"), -1),
        ],
    )
    def test_dim_table(self, gens, expected):
        assert Ideal(R7, gens).dim() == expected

    def test_dim_positive_for_curve(self):
        ideal = Ideal(R7, ("y + 6*x^2", "z + 6*x^3"))
        assert ideal.dim() == 1


class TestOrderIndependence:
    """Membership, equality, and dimension cannot depend on the order."""

    def test_member_same_under_lex(self):
        lex = R7.with_order(MonomialOrder.lex())
        f_g = ("x^2 + y*z", "x*y + z^2")
        probe = "x^3 + y^2*z"
        a = R7.parse(probe) in Ideal(R7, f_g)
        b = lex.parse(probe) in Ideal(lex, f_g)
        assert a == b

    def test_dim_same_under_lex(self):
        lex = R7.with_order(MonomialOrder.lex())
        for gens in (("x*y", "y*z"), ("x^2 + y", "z^3")):
            assert Ideal(R7, gens).dim() == Ideal(lex, gens).dim()


class TestResourceLimits:
    def test_pair_cap_raises_with_partial(self):
        ring = Ring(7, ("x", "y", "z", "w"))
        gens = ("x^3 + y*w", "y^3 + z*w", "z^3 + x*w", "w^3 + x*y*z")
        with pytest.raises(ResourceLimitError) as info:
            buchberger(ring, [ring.parse(g) for g in gens], ring.order,
                       Limits(max_pairs=2))
        assert info.value.partial is not None

    def test_basis_cap_raises(self):
        ring = Ring(7, ("x", "y", "z", "w"))
        gens = ("x^3 + y*w", "y^3 + z*w", "z^3 + x*w", "w^3 + x*y*z")
        with pytest.raises(ResourceLimitError):
            buchberger(ring, [ring.parse(g) for g in gens], ring.order,
                       Limits(max_basis=4))

    def test_default_limits_comfortable(self):
        ideal = Ideal(R7, ("x^3 + y*z", "y^3 + x*z", "z^3 + x*y"))
        assert len(ideal.groebner(limits=DEFAULT_LIMITS)) >= 3


class TestAgainstToyBuchberger:
    """The engine agrees with the unoptimized textbook implementation."""

    @pytest.mark.parametrize("p", [2, 5])
    @pytest.mark.parametrize("kind", ["grevlex", "lex"])
    def test_random_reduced_bases_agree(self, p, kind):
        rng = np.random.default_rng(1000 * p + len(kind))
        ring = Ring(p, ("x", "y"), MonomialOrder(kind))
        for trial in range(30):
            gens = []
            for _ in range(int(rng.integers(1, 4))):
                exps = rng.integers(0, 4, size=(int(rng.integers(1, 4)), 2))
                coeffs = rng.integers(0, p, size=exps.shape[0])
                gens.append(ring.make_poly(exps, coeffs))
            expected = toy_groebner([RefPoly.from_poly(g) for g in gens], kind)
            got = Ideal(ring, gens).groebner()
            assert [RefPoly.from_poly(g) for g in got] == expected

    @pytest.mark.parametrize("kind", ["grevlex", "lex"])
    def test_three_variable_cases_agree(self, kind):
        rng = np.random.default_rng(len(kind))
        ring = Ring(3, ("x", "y", "z"), MonomialOrder(kind))
        for trial in range(15):
            gens = []
            for _ in range(int(rng.integers(2, 4))):
                exps = rng.integers(0, 3, size=(int(rng.integers(1, 3)), 3))
                coeffs = rng.integers(1, 3, size=exps.shape[0])
                gens.append(ring.make_poly(exps, coeffs))
            expected = toy_groebner([RefPoly.from_poly(g) for g in gens], kind)
            got = Ideal(ring, gens).groebner()
            assert [RefPoly.from_poly(g) for g in got] == expected
