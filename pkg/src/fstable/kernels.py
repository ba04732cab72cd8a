"""Kernel dispatch: numba-accelerated term kernels with a numpy fallback.

The backend is chosen by the FSTABLE_KERNELS environment variable
("auto", "numba", or "numpy", default "auto") and can be switched at
runtime with use_backend(), which the benchmark and the backend
equivalence tests rely on. Both backends produce identical canonical
term arrays.
"""

import os

from . import _kernels_np

LEX = _kernels_np.LEX
GREVLEX = _kernels_np.GREVLEX
BLOCK = _kernels_np.BLOCK

# order-independent helpers, always the numpy versions
canon_terms = _kernels_np.canon_terms
sort_keys = _kernels_np.sort_keys
modinv = _kernels_np.modinv

_impl = None
_impl_name = None


def available_backends() -> list[str]:
    names = ["numpy"]
    try:
        import numba  # noqa: F401

        names.insert(0, "numba")
    except ImportError:
        pass
    return names


def use_backend(name: str) -> str:
    """Select the kernel backend ("numba", "numpy", or "auto"). Returns the
    name actually selected."""
    global _impl, _impl_name
    if name == "auto":
        try:
            from . import _kernels_nb as impl

            name = "numba"
        except ImportError:
            impl = _kernels_np
            name = "numpy"
    elif name == "numba":
        from . import _kernels_nb as impl
    elif name == "numpy":
        impl = _kernels_np
    else:
        raise ValueError(
            f"unknown kernel backend {name!r} (expected auto, numba, or numpy)"
        )
    _impl = impl
    _impl_name = name
    return name


def active_backend() -> str:
    _ensure()
    return _impl_name


def _ensure():
    if _impl is None:
        use_backend(os.environ.get("FSTABLE_KERNELS", "auto"))


def cmp_exps(a, b, code, k):
    _ensure()
    return _impl.cmp_exps(a, b, code, k)


def merge_terms(e1, c1, e2, c2, p, code, k):
    _ensure()
    return _impl.merge_terms(e1, c1, e2, c2, p, code, k)


def mul_terms(e1, c1, e2, c2, p, code, k):
    _ensure()
    return _impl.mul_terms(e1, c1, e2, c2, p, code, k)


def normal_form_terms(fe, fc, be, bc, offs, p, code, k):
    _ensure()
    return _impl.normal_form_terms(fe, fc, be, bc, offs, p, code, k)


def scale_terms(exps, coeffs, shift, coef, p):
    """Multiply a canonical term array by coef * x^shift; order-preserving."""
    c = coef % p
    if coeffs.shape[0] == 0 or c == 0:
        return exps[:0], coeffs[:0]
    return exps + shift, (coeffs * c) % p
