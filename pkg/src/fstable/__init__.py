"""Frobenius-stable ideal computations in prime characteristic.

The package computes, for a quotient A = R/uR of a polynomial ring over
F_p, the family of ideals defining F-stable submodules of the top local
cohomology module, its nilpotent part, F-purity via Fedder's criterion,
star closures, and parameter test ideals, in both the
complete-intersection and the Gorenstein setting.

Quick start::

    from fstable import Ring, Ideal, CISetup

    ring = Ring(2, ("x", "y"))
    setup = CISetup(ring, ["x*y"])
    setup.is_f_pure()                      # True
    setup.membership(Ideal(ring, ["x"]))   # member
    setup.parameter_test_ideal().ideal     # (x, y)

Environment switches: FSTABLE_KERNELS selects the array-kernel backend
(auto | numba | numpy); FSTABLE_DEBUG=1 turns on expensive internal
cross-checks.
"""

from .ci import CISetup
from .errors import (FstableError, ParseError, ResourceLimitError, SetupError)
from .frobenius import (bracket_power, fedder_f_pure, frobenius_power,
                        frobenius_root)
from .gorenstein import GorSetup, compute_k_ideal
from .groebner import DEFAULT_LIMITS, Ideal, Limits, buchberger, divexact, normal_form
from .ops import (compute_K_u, enumerate_script_I, height_in_A, in_script_I,
                  in_script_I0, in_script_I_gor, is_F_rational_report,
                  parameter_test_ideal, parameter_test_ideal_gor, star_closure,
                  star_closure_gor)
from .problemfile import Mode, ProblemFile, load_problem, parse_problem
from .ring import MonomialOrder, Polynomial, Ring
from .stable import (Enumeration, FRationalReport, MemberRecord, Membership,
                     NilStatus, Nilpotency, StableSystem, TestIdealResult,
                     pool_linear, pool_vars)

__version__ = "0.1.0"

__all__ = [
    "CISetup", "DEFAULT_LIMITS", "Enumeration", "FRationalReport",
    "FstableError", "GorSetup", "Ideal", "Limits", "MemberRecord",
    "Membership", "Mode", "MonomialOrder", "NilStatus", "Nilpotency",
    "ParseError", "Polynomial", "ProblemFile", "ResourceLimitError", "Ring",
    "SetupError", "StableSystem", "TestIdealResult", "bracket_power",
    "buchberger", "compute_k_ideal", "divexact", "fedder_f_pure",
    "frobenius_power", "frobenius_root", "load_problem", "normal_form",
    "parse_problem", "pool_linear", "pool_vars", "in_script_I",
    "in_script_I0", "star_closure", "height_in_A", "enumerate_script_I",
    "parameter_test_ideal", "is_F_rational_report", "compute_K_u",
    "in_script_I_gor", "star_closure_gor", "parameter_test_ideal_gor",
    "run", "__version__",
]


def run(argv=None) -> int:
    """Command-line entry point; returns the process exit code."""
    from .cli import main

    return main(argv)
