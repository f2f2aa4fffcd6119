"""Kernel backend selection.

The compiled extension is preferred when available; the numpy fallback is
used otherwise, or when QORBIT_FORCE_PY is set. Both expose identical
``ca_newton`` / ``branch_newton`` signatures (see ``benchmarks/`` for a
speed comparison).
"""

import os

if os.environ.get("QORBIT_FORCE_PY"):
    from . import _ca_py as _impl
else:
    try:
        from . import _ca_ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _ca_py as _impl

BACKEND = _impl.BACKEND
ca_newton = _impl.ca_newton
branch_newton = _impl.branch_newton
