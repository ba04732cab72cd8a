"""Gorenstein setups.

Here A = R/uR is only assumed Gorenstein and the single multiplier
epsilon is supplied by the caller (it is the element implementing the
generating Frobenius action on the top local cohomology). The floor of
the family is no longer uR but its stabilization

    K_u = union over e of (u^[p^(e+1)] R : epsilon^(1 + p + ... + p^e)),

computed as an ascending colon chain until it repeats once; ideals
I containing K_u are members when epsilon * I lies in I^[p]. For a
complete intersection with epsilon = (u_1...u_m)^(p-1) this reproduces
the complete-intersection family, with K_u = uR; in the principal case
K_u = (u). Heights are still taken against dim R/uR.
"""

from __future__ import annotations

from .errors import ResourceLimitError, SetupError
from .frobenius import bracket_power, frobenius_power
from .groebner import DEFAULT_LIMITS, Ideal, Limits
from .ring import Polynomial, Ring
from .stable import (
    Enumeration,
    FRationalReport,
    Membership,
    StableSystem,
    TestIdealResult,
    _interreduce,
)


def compute_k_ideal(ring: Ring, u_ideal: Ideal, epsilon: Polynomial,
                    limits: Limits | None = None) -> tuple[Ideal, tuple[Ideal, ...]]:
    """The stabilized colon ideal K_u and the chain that reached it.

    Chain element e is (u^[p^(e+1)] : epsilon^(1+p+...+p^e)); the chain is
    ascending and the first repeat is the stable value. Exhausting e_max
    before stabilizing raises, with the partial chain attached.
    """
    limits = limits if limits is not None else DEFAULT_LIMITS
    chain: list[Ideal] = []
    eps_power = epsilon  # epsilon^(1+p+...+p^e), updated incrementally
    for e in range(limits.e_max + 1):
        if e > 0:
            eps_power = frobenius_power(eps_power, 1) * epsilon
        c = _interreduce(
            bracket_power(u_ideal, e + 1).colon(eps_power, limits), limits
        )
        if chain:
            if not c.contains(chain[-1], limits):
                # reachable by input: an epsilon that implements a Frobenius
                # action always yields an ascending chain, so a descent means
                # the supplied epsilon is not such an element
                raise SetupError(
                    "epsilon does not implement a Frobenius action: the "
                    "stabilization chain is not ascending"
                )
            if c == chain[-1]:
                return c, tuple(chain) + (c,)
        chain.append(c)
    raise ResourceLimitError(
        f"colon chain did not stabilize within e_max={limits.e_max}",
        partial=tuple(chain),
    )


class GorSetup:
    """The data (p, variables, u generators, epsilon) plus limits."""

    def __init__(self, ring: Ring, u_gens, epsilon, limits: Limits | None = None):
        self.ring = ring
        gens = []
        for g in u_gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.is_zero():
                raise SetupError("u generators must be nonzero")
            if g.total_degree() == 0 or g.constant_term() != 0:
                raise SetupError("u generators must be nonunits with zero constant term")
            gens.append(g)
        if not gens:
            raise SetupError("need at least one u generator")
        if isinstance(epsilon, str):
            epsilon = ring.parse(epsilon)
        if epsilon.is_zero():
            raise SetupError("epsilon must be nonzero")
        self.u_gens = tuple(gens)
        self.epsilon = epsilon
        self.limits = limits if limits is not None else DEFAULT_LIMITS
        u_ideal = Ideal(ring, self.u_gens)
        quotient_dim = u_ideal.dim(self.limits)
        self.delta = ring.nvars - quotient_dim
        self.k_ideal, self.k_chain = compute_k_ideal(ring, u_ideal, epsilon, self.limits)
        self.system = StableSystem(ring, epsilon, self.k_ideal, quotient_dim, self.limits)

    @property
    def u_ideal(self) -> Ideal:
        return Ideal(self.ring, self.u_gens)

    @property
    def dim_a(self) -> int:
        return self.system.dim_a

    def membership(self, ideal: Ideal) -> Membership:
        return self.system.membership(ideal)

    def star_closure(self, seed: Ideal, max_rounds: int | None = None) -> Ideal:
        return self.system.star_closure(seed, max_rounds)

    def height(self, ideal: Ideal) -> int:
        normalized = self.system.normalize(ideal)
        return self.dim_a - normalized.dim(self.limits)

    def enumerate_members(self, pool=None, pool_label: str = "") -> Enumeration:
        return self.system.enumerate_members(pool, pool_label, with_nilpotency=False)

    def parameter_test_ideal(self, pool=None, pool_label: str = "") -> TestIdealResult:
        return self.system.parameter_test_ideal(pool, pool_label)

    def f_rational_report(self, pool=None, pool_label: str = "") -> FRationalReport:
        return self.system.f_rational_report(pool, pool_label)
