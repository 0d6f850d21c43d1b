"""Seeded instance generators and the exhaustive small-ground-set stream.

Everything here is deterministic for a fixed seed; no ambient randomness.
"""

import random
from itertools import combinations

from .bits import mask_of
from .complexes import SimplicialComplex, build_complex
from .errors import ResourceLimitError

ALL_COMPLEXES_MAX_N = 6  # the antichain count explodes past this


def random_complex(n, seed):
    """A random nonvoid complex: a handful of random nonempty facet candidates."""
    rng = random.Random(f"complex:{n}:{seed}")
    count = rng.randint(1, max(2, n))
    p = rng.uniform(0.2, 0.8)
    cands = []
    for _ in range(count):
        mask = 0
        while mask == 0:
            mask = sum(1 << i for i in range(n) if rng.random() < p)
        cands.append(mask)
    return build_complex(n, cands)


def random_quasi_forest(n, seed):
    """Random quasi-forest by leaf gluing.

    Each new facet takes a nonempty chunk of an existing facet (its branch)
    plus at least one vertex never used before, which makes it a leaf at the
    moment it is added. Construction stops when fresh vertices run out.
    """
    rng = random.Random(f"quasi-forest:{n}:{seed}")
    first = rng.randint(1, n)
    facets = [mask_of(rng.sample(range(1, n + 1), first))]
    used = facets[0]
    while True:
        fresh = [v for v in range(1, n + 1) if not (used >> (v - 1)) & 1]
        if not fresh or rng.random() < 0.2:
            break
        branch = rng.choice(facets)
        branch_verts = [v + 1 for v in range(n) if (branch >> v) & 1]
        take = rng.randint(1, len(branch_verts))
        grab = rng.randint(1, len(fresh))
        newf = mask_of(rng.sample(branch_verts, take)) | mask_of(rng.sample(fresh, grab))
        facets.append(newf)
        used |= newf
    return build_complex(n, facets)


def all_complexes(n, include_void=False):
    """Every complex on ground set [n], one per antichain of facets.

    Streams the irrelevant complex first, then all antichains of nonempty
    subsets by depth-first extension. Guarded: the count grows like the
    Dedekind numbers and becomes unmanageable past n = 6.
    """
    if n > ALL_COMPLEXES_MAX_N:
        raise ResourceLimitError(f"refusing to enumerate all complexes for n = {n}")
    if include_void:
        yield SimplicialComplex(n, (), void=True)
    yield SimplicialComplex(n, ())  # the irrelevant complex {emptyset}
    masks = list(range(1, 1 << n))

    def extend(start, chosen):
        for idx in range(start, len(masks)):
            m = masks[idx]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            chosen.append(m)
            yield build_complex(n, chosen)
            yield from extend(idx + 1, chosen)
            chosen.pop()

    yield from extend(0, [])
