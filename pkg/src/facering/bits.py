"""Bitmask helpers for subsets of a 1-based ground set {1, ..., n}.

Vertex v is stored as bit v-1, so the full set on n vertices is (1 << n) - 1.
"""


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verts_of(mask):
    """Decode a bitmask into an increasing tuple of 1-based vertices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def submasks(mask):
    """Yield every submask of `mask`, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def iter_bits(mask):
    """Yield the set bits of `mask` as single-bit masks, low to high."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def facet_sort_key(mask):
    # canonical facet order: by size, then lexicographic vertex list
    return (mask.bit_count(), verts_of(mask))
