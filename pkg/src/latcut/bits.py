"""Bitmask helpers.

Subsets of a poset's elements are plain ints throughout the package: bit i set
means element i belongs to the subset.  Python ints are arbitrary precision,
so nothing here caps the universe size.
"""


def iter_bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    """Pack an iterable of indices into a bitmask."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m
