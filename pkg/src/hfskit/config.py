"""Global bit-length cap guarding operations that exponentiate codes."""

import contextlib
import os

DEFAULT_MAX_BITS = 1 << 20
ENV_VAR = "HFSKIT_MAX_BITS"


def _from_env():
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_BITS
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {raw!r}")
    return value


_max_bits = _from_env()


def get_max_bits() -> int:
    return _max_bits


def set_max_bits(bits: int) -> None:
    global _max_bits
    if bits <= 0:
        raise ValueError(f"bit cap must be positive, got {bits}")
    _max_bits = int(bits)


@contextlib.contextmanager
def max_bits(bits: int):
    """Temporarily replace the bit cap."""
    previous = _max_bits
    set_max_bits(bits)
    try:
        yield
    finally:
        set_max_bits(previous)
