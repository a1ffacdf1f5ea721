"""Hot-loop kernels: compiled extension when available, numpy fallback.

The backend is chosen once at import. Set ``SU11OPTICS_BACKEND=pure`` to
force the fallback (or ``=fast`` to insist on the extension and fail
loudly when it is missing). ``benchmarks/bench_kernels.py`` compares the
two.
"""

import os

_requested = os.environ.get("SU11OPTICS_BACKEND", "").strip().lower()

if _requested == "pure":
    from . import _pure as _impl
elif _requested == "fast":
    from . import _fast as _impl  # type: ignore[no-redef]
elif _requested:
    raise ImportError(f"unknown SU11OPTICS_BACKEND={_requested!r} (use 'pure' or 'fast')")
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
compose_chain = _impl.compose_chain
mobius_sweep = _impl.mobius_sweep
iterate_mobius = _impl.iterate_mobius

__all__ = ["BACKEND", "compose_chain", "mobius_sweep", "iterate_mobius"]
