"""Backend selection for the term kernels.

The compiled extension is preferred when importable; the pure-Python
twin is the fallback.  Setting POWSYM_PURE=1 in the environment forces
the fallback, and use() swaps backends at runtime (the benchmark and
the backend-agreement tests rely on this).
"""

import os

from . import _kernel_py

kernel = _kernel_py

if not os.environ.get("POWSYM_PURE"):
    try:
        from . import _kernel as _compiled

        kernel = _compiled
    except ImportError:
        pass


def available_backends() -> dict:
    out = {_kernel_py.BACKEND: _kernel_py}
    try:
        from . import _kernel as _compiled

        out[_compiled.BACKEND] = _compiled
    except ImportError:
        pass
    return out


def use(name: str):
    """Switch the active backend ("python" or "cython")."""
    global kernel
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"backend {name!r} not available, have {sorted(backends)}")
    kernel = backends[name]
    return kernel


def backend_name() -> str:
    return kernel.BACKEND
