# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bit kernels over the little-endian byte image of a Python int."""

from libc.stdint cimport uint8_t, uint16_t

cdef extern from *:
    int __builtin_ctz(unsigned int x) nogil


cdef uint16_t SPREAD[256]
cdef uint8_t COMPACT[256]


cdef void _init_tables():
    cdef int b, k
    cdef uint16_t s
    cdef uint8_t c
    for b in range(256):
        s = 0
        c = 0
        for k in range(8):
            if (b >> k) & 1:
                s |= <uint16_t>(1 << (2 * k))
        for k in range(4):
            if (b >> (2 * k)) & 1:
                c |= <uint8_t>(1 << k)
        SPREAD[b] = s
        COMPACT[b] = c


_init_tables()


cdef inline Py_ssize_t _nbytes(object n):
    return (n.bit_length() + 7) >> 3


def bit_positions(n):
    """Ascending positions of the 1 bits of ``n``."""
    if not n:
        return []
    cdef bytes data = n.to_bytes(_nbytes(n), "little")
    cdef const uint8_t[:] view = data
    cdef Py_ssize_t i, size = view.shape[0]
    cdef unsigned int byte
    cdef long base
    out = []
    for i in range(size):
        byte = view[i]
        base = i << 3
        while byte:
            out.append(base + __builtin_ctz(byte))
            byte &= byte - 1
    return out


def spread_bits(n):
    """Move bit ``i`` of ``n`` to bit ``2i``."""
    if not n:
        return 0
    cdef bytes data = n.to_bytes(_nbytes(n), "little")
    cdef const uint8_t[:] src = data
    cdef Py_ssize_t i, size = src.shape[0]
    cdef bytearray buf = bytearray(2 * size)
    cdef uint8_t[:] dst = buf
    cdef uint16_t s
    for i in range(size):
        s = SPREAD[src[i]]
        dst[2 * i] = s & 0xFF
        dst[2 * i + 1] = s >> 8
    return int.from_bytes(buf, "little")


def compact_bits(n):
    """Collect the even bits of ``n``: bit ``2i`` moves to bit ``i``."""
    if not n:
        return 0
    cdef Py_ssize_t size = _nbytes(n)
    size += size & 1
    cdef bytes data = n.to_bytes(size, "little")
    cdef const uint8_t[:] src = data
    cdef Py_ssize_t i, half = size >> 1
    cdef bytearray buf = bytearray(half)
    cdef uint8_t[:] dst = buf
    for i in range(half):
        dst[i] = COMPACT[src[2 * i]] | (COMPACT[src[2 * i + 1]] << 4)
    return int.from_bytes(buf, "little")

