"""Complete-intersection setups.

A setup fixes F_p[x_1..x_n], a regular sequence u_1..u_m of nonunits, and
studies ideals I containing uR whose product with (u_1...u_m)^(p-1) lands
in I^[p]. These are exactly the ideals defining Frobenius-stable
submodules of the top local cohomology of A = R/uR, so membership, star
closure, the nilpotent part, enumeration, the parameter test ideal, and
the F-rationality report all live here, delegating the shared mechanics
to StableSystem. Heights are taken in A: height = dim A - dim R/I.
"""

from __future__ import annotations

from .errors import SetupError
from .frobenius import fedder_f_pure
from .groebner import DEFAULT_LIMITS, Ideal, Limits
from .ring import Polynomial, Ring
from .stable import (
    Enumeration,
    FRationalReport,
    Membership,
    Nilpotency,
    StableSystem,
    TestIdealResult,
)


def _validate_u(ring: Ring, u_gens) -> tuple[Polynomial, ...]:
    gens = []
    for g in u_gens:
        if isinstance(g, str):
            g = ring.parse(g)
        if g.is_zero():
            raise SetupError("u generators must be nonzero")
        if g.total_degree() == 0 or g.constant_term() != 0:
            raise SetupError(
                "u generators must be nonunits with zero constant term"
            )
        gens.append(g)
    if not gens:
        raise SetupError("need at least one u generator")
    return tuple(gens)


class CISetup:
    """The data (p, variables, regular sequence u) plus resource limits."""

    def __init__(self, ring: Ring, u_gens, limits: Limits | None = None):
        self.ring = ring
        self.u_gens = _validate_u(ring, u_gens)
        self.limits = limits if limits is not None else DEFAULT_LIMITS
        u_ideal = Ideal(ring, self.u_gens)
        n = len(self.u_gens)
        quotient_dim = u_ideal.dim(self.limits)
        if quotient_dim != ring.nvars - n:
            raise SetupError(
                f"u must be a regular sequence: expected dim R/uR = "
                f"{ring.nvars - n}, got {quotient_dim}"
            )
        product = self.u_gens[0]
        for g in self.u_gens[1:]:
            product = product * g
        self.u_product = product
        self.multiplier = product ** (ring.p - 1)
        self.system = StableSystem(ring, self.multiplier, u_ideal, quotient_dim, self.limits)
        self._f_pure: bool | None = None

    @property
    def u_ideal(self) -> Ideal:
        return self.system.floor

    @property
    def dim_a(self) -> int:
        return self.system.dim_a

    def is_f_pure(self) -> bool:
        """Fedder's criterion for A = R/uR."""
        if self._f_pure is None:
            self._f_pure = fedder_f_pure(self.u_ideal, self.limits)
        return self._f_pure

    def membership(self, ideal: Ideal) -> Membership:
        return self.system.membership(ideal)

    def star_closure(self, seed: Ideal, max_rounds: int | None = None) -> Ideal:
        return self.system.star_closure(seed, max_rounds)

    def nilpotency(self, ideal: Ideal, e_max: int | None = None) -> Nilpotency:
        return self.system.nilpotency(ideal, e_max)

    def height(self, ideal: Ideal) -> int:
        """Height of the image of the (normalized) ideal in A."""
        normalized = self.system.normalize(ideal)
        return self.dim_a - normalized.dim(self.limits)

    def enumerate_members(self, pool=None, pool_label: str = "") -> Enumeration:
        return self.system.enumerate_members(pool, pool_label, with_nilpotency=True)

    def parameter_test_ideal(self, pool=None, pool_label: str = "") -> TestIdealResult:
        result = self.system.parameter_test_ideal(pool, pool_label)
        if not result.vacuous and self.is_f_pure():
            # under F-purity there is a unique minimal positive-height
            # member and it must be the intersection itself
            positives = [
                r.ideal for r in result.enumeration.members
                if r.height > 0 and not r.ideal.is_unit(self.limits)
            ]
            least = [
                m for m in positives
                if all(other.contains(m, self.limits) for other in positives)
            ]
            if len(least) != 1 or least[0] != result.ideal:
                raise AssertionError(
                    "F-pure setup without a unique minimal positive-height "
                    "member equal to the intersection"
                )
        return result

    def f_rational_report(self, pool=None, pool_label: str = "") -> FRationalReport:
        return self.system.f_rational_report(pool, pool_label)
