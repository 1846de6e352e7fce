"""Backend selection for the search kernels.

The compiled ``_ckernels`` module is used when it was built and the instance
fits in 64-bit masks; everything else runs on the pure-Python ``_pykernels``.
Both backends return identical results, so the choice is invisible to callers.
"""
from __future__ import annotations

from types import ModuleType

from hypertrees import _pykernels

try:
    from hypertrees import _ckernels
except ImportError:  # extension not built
    _ckernels = None

from hypertrees._pykernels import (  # noqa: F401  (re-exported flag constants)
    CC,
    CLASS_FAIL,
    COVERS,
    CYC_CHECKED,
    EMAX,
    EMIN,
    HAS_CYC,
    OPT_COVER_ONLY,
    OPT_CYCLE_ALL,
    OPT_MINMAX,
    SF,
)

_preferred: str = "cython" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend_name() -> str:
    return _preferred


def use_backend(name: str) -> str:
    """Select ``"python"`` or ``"cython"``; returns the previous choice."""
    global _preferred
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available (have {available_backends()})")
    old, _preferred = _preferred, name
    return old


def backend_module(name: str) -> ModuleType:
    if name == "cython":
        if _ckernels is None:
            raise ValueError("compiled kernels are not built")
        return _ckernels
    if name == "python":
        return _pykernels
    raise ValueError(f"unknown backend {name!r}")


def _impl(n: int) -> ModuleType:
    if _preferred == "cython" and n <= 64:
        return _ckernels
    return _pykernels


def _budget(budget: int | None) -> int:
    return -1 if budget is None else int(budget)


def semicycle(n, k, masks, budget=None):
    return _impl(n).semicycle(n, k, masks, _budget(budget))


def tight_cycle(n, k, masks, budget=None):
    return _impl(n).tight_cycle(n, k, masks, _budget(budget))


def chain_cover(n, k, masks, budget=None, stop_when_full=True):
    return _impl(n).chain_cover(n, k, masks, _budget(budget), stop_when_full)


def find_chain(n, k, masks, u, v, budget=None):
    return _impl(n).find_chain(n, k, masks, u, v, _budget(budget))


def max_chain(n, k, masks, budget=None):
    return _impl(n).max_chain(n, k, masks, _budget(budget))


def scan_block(n, k, universe, start, stop, options):
    universe = list(universe)
    impl = _impl(n)
    if impl is _ckernels and len(universe) > 64:
        impl = _pykernels
    return impl.scan_block(n, k, universe, start, stop, options)
