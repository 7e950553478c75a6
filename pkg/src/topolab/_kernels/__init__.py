"""Kernel backend selection.

The compiled Cython extension and the pure-Python module implement the same
five functions; the extension wins when importable.  Set TOPOLAB_BACKEND to
``pure`` or ``compiled`` to force a side (the latter raises if the extension
is missing, which is the point).
"""

import os

from .pure import CLASS_ORDER, MAP_PROP_ORDER  # noqa: F401

_forced = os.environ.get("TOPOLAB_BACKEND", "").strip().lower()

if _forced == "pure":
    from . import pure as _impl
    BACKEND = "pure"
elif _forced == "compiled":
    from . import _speedups as _impl
    BACKEND = "compiled"
elif _forced:
    raise ImportError(f"unknown TOPOLAB_BACKEND value: {_forced!r}")
else:
    try:
        from . import _speedups as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl
        BACKEND = "pure"

space_pack = _impl.space_pack
class_masks = _impl.class_masks
map_masks = _impl.map_masks
enumerate_masks = _impl.enumerate_masks
composition_failures = _impl.composition_failures
