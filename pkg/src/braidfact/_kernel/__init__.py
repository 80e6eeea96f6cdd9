"""Kernel selection: compiled Garside normal-form core with pure fallback.

Set BRAIDFACT_PURE=1 to force the pure-Python implementation even when the
compiled extension is available.
"""

import os

from . import garside_py

_impl = garside_py
if os.environ.get("BRAIDFACT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _garside as _compiled

        _impl = _compiled
    except ImportError:
        pass

IMPL_NAME = _impl.IMPL_NAME
normal_form = _impl.normal_form
half_twist_perm = garside_py.half_twist_perm


def implementations():
    """All available kernel implementations, for parity tests and benchmarks."""
    impls = [garside_py]
    try:
        from . import _garside as compiled

        impls.append(compiled)
    except ImportError:
        pass
    return impls
