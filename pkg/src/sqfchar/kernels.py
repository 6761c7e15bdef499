"""Backend selection for the hot kernels.

``SQFCHAR_BACKEND=numpy`` forces the pure-numpy path; ``numba`` (the default
when numba imports) uses the compiled kernels. Both produce identical output.
"""

import logging
import os

from . import _kernels_numpy

log = logging.getLogger(__name__)

_KERNEL_NAMES = ("base_codes", "lookup", "conjugacy_labels", "structure_counts", "rref_mod")


def _load(name):
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    raise ValueError(f"unknown SQFCHAR_BACKEND {name!r} (expected 'numba' or 'numpy')")


def _default_backend():
    requested = os.environ.get("SQFCHAR_BACKEND", "").strip().lower()
    if requested:
        return requested
    try:
        import numba  # noqa: F401
    except ImportError:
        log.warning("numba not importable; using the numpy kernels")
        return "numpy"
    return "numba"


BACKEND = _default_backend()
_impl = _load(BACKEND)


def get_backend(name=None):
    """Return the kernel module for ``name`` (default: the active backend)."""
    return _impl if name is None else _load(name)


base_codes = _impl.base_codes
lookup = _impl.lookup
conjugacy_labels = _impl.conjugacy_labels
structure_counts = _impl.structure_counts
rref_mod = _impl.rref_mod
