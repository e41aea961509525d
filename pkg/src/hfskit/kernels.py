"""Backend selection for the bit kernels.

The compiled extension is preferred; set ``HFSKIT_PURE_PYTHON=1`` to force
the pure-Python implementation.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("HFSKIT_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels
    else:
        BACKEND = "cython"
else:
    _impl = _pykernels

bit_positions = _impl.bit_positions
spread_bits = _impl.spread_bits
compact_bits = _impl.compact_bits

__all__ = ["BACKEND", "bit_positions", "spread_bits", "compact_bits"]
