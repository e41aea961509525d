"""Pure-Python bit kernels, used when the compiled extension is unavailable.

Each routine works on the little-endian byte image of the integer so the
per-bit work happens inside ``bytes.translate`` and slicing.
"""


def _spread_nibble(x):
    r = 0
    for k in range(4):
        if x >> k & 1:
            r |= 1 << (2 * k)
    return r


def _compact_even(x):
    r = 0
    for k in range(4):
        if x >> (2 * k) & 1:
            r |= 1 << k
    return r


_BYTE_BITS = tuple(tuple(k for k in range(8) if b >> k & 1) for b in range(256))
_SPREAD_LO = bytes(_spread_nibble(b & 0xF) for b in range(256))
_SPREAD_HI = bytes(_spread_nibble(b >> 4) for b in range(256))
_COMPACT_LO = bytes(_compact_even(b) for b in range(256))
_COMPACT_HI = bytes(_compact_even(b) << 4 for b in range(256))


def _nbytes(n):
    return (n.bit_length() + 7) >> 3


def bit_positions(n):
    """Ascending positions of the 1 bits of ``n``."""
    out = []
    if not n:
        return out
    data = n.to_bytes(_nbytes(n), "little")
    extend = out.extend
    for i, byte in enumerate(data):
        if byte:
            base = i << 3
            extend([base + k for k in _BYTE_BITS[byte]])
    return out


def spread_bits(n):
    """Move bit ``i`` of ``n`` to bit ``2i``."""
    if not n:
        return 0
    data = n.to_bytes(_nbytes(n), "little")
    out = bytearray(2 * len(data))
    out[0::2] = data.translate(_SPREAD_LO)
    out[1::2] = data.translate(_SPREAD_HI)
    return int.from_bytes(out, "little")


def compact_bits(n):
    """Collect the even bits of ``n``: bit ``2i`` moves to bit ``i``."""
    if not n:
        return 0
    size = _nbytes(n)
    size += size & 1
    data = n.to_bytes(size, "little")
    low = data[0::2].translate(_COMPACT_LO)
    high = data[1::2].translate(_COMPACT_HI)
    return int.from_bytes(low, "little") | int.from_bytes(high, "little")
