"""Kernel selection: compiled extension when available, pure Python otherwise.

Both implementations expose the same functions with identical outputs,
including traversal order; `select` forces one explicitly (used by the
benchmark and the equivalence tests).
"""

from __future__ import annotations

from . import _kernel_py

try:  # pragma: no cover - depends on the build environment
    from . import _speedups as _kernel_cy
except ImportError:  # pragma: no cover
    _kernel_cy = None

_active = _kernel_cy if _kernel_cy is not None else _kernel_py


def available() -> dict:
    return {"py": _kernel_py, "cy": _kernel_cy}


def active_name() -> str:
    return "cy" if _active is _kernel_cy and _kernel_cy is not None else "py"


def select(name: str):
    """Switch the active kernel ('py' or 'cy'); returns the previous name."""
    global _active
    prev = active_name()
    if name == "py":
        _active = _kernel_py
    elif name == "cy":
        if _kernel_cy is None:
            raise RuntimeError("compiled kernel is not available")
        _active = _kernel_cy
    else:
        raise ValueError(f"unknown kernel {name!r}")
    return prev


def _walker_for(n, family_size=0):
    # the compiled kernel covers the enumeration domain (n <= 8) and
    # modest basis families; anything bigger runs on the python twin
    if _active is _kernel_py or n > 8 or family_size > 250:
        return _kernel_py
    return _active


def explore(n, **kwargs):
    return _walker_for(n).explore(n, **kwargs)


def extensions(n, tops):
    return _walker_for(n, len(tuple(tops))).extensions(n, tops)


def is_canonical(n, r, bases):
    return _walker_for(n, len(bases)).is_canonical(n, r, bases)


def canonical_code(n, r, bases):
    return _walker_for(n, len(bases)).canonical_code(n, r, bases)


def automorphism_order(n, r, bases):
    return _walker_for(n, len(bases)).automorphism_order(n, r, bases)
