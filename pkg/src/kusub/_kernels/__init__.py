"""Hot loops of lattice construction.

Two interchangeable backends exist: the compiled ``_ckernels`` extension and
the pure-Python ``_pykernels`` module.  The compiled one is chosen at import
time when it was built; set ``KUSUB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("KUSUB_PURE_PYTHON"):
        raise ImportError("pure Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def backend_name() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def set_backend(name: str) -> None:
    global _active
    _active = BACKENDS[name]


def get_backend(name=None):
    return _active if name is None else BACKENDS[name]
