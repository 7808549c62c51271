"""Backend selection for the hot loops.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python twin ``_pykernels`` is used. Both expose the same four functions
and must return identical results.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS: dict[str, ModuleType | None] = {"python": _pykernels, "cython": _ckernels}

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return [name for name, mod in _BACKENDS.items() if mod is not None]


def backend() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def set_backend(name: str) -> str:
    """Switch the active backend; returns the previous one's name."""
    global _active
    mod = _BACKENDS.get(name)
    if mod is None:
        raise ValueError(f"backend {name!r} is not available (have {available_backends()})")
    previous = backend()
    _active = mod
    return previous


def convolve(a: list, b: list) -> list:
    return _active.convolve(a, b)


def recurrence_series(num: list, den: list, order: int, sign: int) -> list:
    return _active.recurrence_series(num, den, order, sign)


def dp_next_column(prev: list, n_max: int) -> list:
    return _active.dp_next_column(prev, n_max)


def matmul(a: list, b: list) -> list:
    return _active.matmul(a, b)
