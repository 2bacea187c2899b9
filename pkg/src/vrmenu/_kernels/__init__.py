"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension is optional: if it failed to build, or the
``VRMENU_PURE`` environment variable is set to a non-empty value, the
pure implementation is used instead. Both walk their inputs in the same
left-to-right order, so accumulated sums are bit-identical across
backends and any simulation seeded the same way produces the same bytes
either way.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("VRMENU_PURE"):
    BACKEND = "pure"
    accumulate_trials = pure.accumulate_trials
else:
    try:
        from . import _native

        BACKEND = "native"
        accumulate_trials = _native.accumulate_trials
    except ImportError:
        BACKEND = "pure"
        accumulate_trials = pure.accumulate_trials

__all__ = ["BACKEND", "accumulate_trials", "pure"]
