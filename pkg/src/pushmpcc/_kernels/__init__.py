"""Batched evaluation kernels with a compiled core and a numpy fallback.

The compiled extension is preferred when importable; set the
PUSHMPCC_BACKEND environment variable to "python" or "compiled" to force
one, or call set_backend() at runtime (used by the backend benchmark).
"""

import os

from . import _numpy

_impl = None
_forced = os.environ.get("PUSHMPCC_BACKEND", "").strip().lower()

if _forced == "python":
    _impl = _numpy
elif _forced in ("", "compiled"):
    try:
        from . import _core as _impl
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "PUSHMPCC_BACKEND=compiled but the extension is not built")
        _impl = _numpy
else:
    raise ValueError(f"unknown PUSHMPCC_BACKEND value: {_forced!r}")


def backend_name():
    return _impl.BACKEND_NAME


def set_backend(name):
    """Switch kernels at runtime; returns the previous backend name."""
    global _impl
    prev = _impl.BACKEND_NAME
    if name == "python":
        _impl = _numpy
    elif name == "compiled":
        from . import _core
        _impl = _core
    else:
        raise ValueError(f"unknown backend name: {name!r}")
    return prev


def dynamics_batch(x_contact, L, states, controls):
    return _impl.dynamics_batch(x_contact, L, states, controls)


def dynamics_jacobians_batch(x_contact, L, states, controls):
    return _impl.dynamics_jacobians_batch(x_contact, L, states, controls)
