"""Backend selection for the mixture-reconstruction hot loop.

The compiled extension is preferred when importable; otherwise the numpy
fallback is used.  Set WERNERCERT_PURE_PYTHON=1 to force the fallback, or
pass ``backend=`` explicitly (used by the benchmark and the agreement
tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _mixture_py
from .errors import InvalidParameterError

try:
    from . import _mixture as _compiled
except ImportError:
    _compiled = None

_FORCE_PURE = os.environ.get("WERNERCERT_PURE_PYTHON", "") == "1"

BACKENDS = ("compiled", "numpy")


def available_backends() -> tuple[str, ...]:
    return BACKENDS if _compiled is not None else ("numpy",)


def backend_name() -> str:
    """Name of the backend picked at import time."""
    if _compiled is not None and not _FORCE_PURE:
        return "compiled"
    return "numpy"


def reconstruct_mixture(weights, factors, backend: str | None = None) -> np.ndarray:
    """Weighted sum of pure product projectors, sum_k w_k |v_k><v_k|.

    ``weights`` is a length-K real array and ``factors`` a K x n x d complex
    array of local state vectors; v_k is the Kronecker product of row k.
    Returns the dense d**n x d**n mixture.
    """
    w = np.ascontiguousarray(weights, dtype=np.float64)
    f = np.ascontiguousarray(factors, dtype=np.complex128)
    if w.ndim != 1 or f.ndim != 3 or f.shape[0] != w.shape[0]:
        raise InvalidParameterError(f"mismatched kernel inputs: weights {w.shape}, factors {f.shape}")
    nterms, nfac, d = f.shape
    dim = d**nfac
    name = backend if backend is not None else backend_name()
    if name == "compiled":
        if _compiled is None:
            raise InvalidParameterError("compiled backend requested but the extension is not available")
        out = np.zeros((dim, dim), dtype=np.complex128)
        _compiled.reconstruct_mixture(w, f, out)
        return out
    if name == "numpy":
        return _mixture_py.reconstruct_mixture(w, f)
    raise InvalidParameterError(f"unknown backend {name!r}; expected one of {BACKENDS}")
