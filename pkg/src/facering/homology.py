"""Reduced simplicial homology ranks over the rationals or a prime field.

Boundary matrices are built from the canonical face ordering and ranks are
computed exactly: fraction-free (Bareiss) elimination over the integers for
the rational case, modular elimination for a prime field. Only ranks are
needed downstream, never the actual cycles.
"""

from .bits import iter_bits
from .complexes import faces_masks_by_card
from .errors import PreconditionError


def rank_int(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination.

    Mutates `rows`; pass a copy if the matrix is needed afterwards.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        pv = lead[col]
        for r in range(rank + 1, m):
            row = rows[r]
            rv = row[col]
            for c in range(col + 1, ncols):
                row[c] = (pv * row[c] - rv * lead[c]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod(rows, p):
    """Rank of an integer matrix over the field with p elements."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, m):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = [x % p for x in rows[rank]]
        rows[rank] = lead
        inv = pow(lead[col], p - 2, p)
        for r in range(rank + 1, m):
            row = rows[r]
            factor = (row[col] * inv) % p
            if factor:
                for c in range(col, ncols):
                    row[c] = (row[c] - factor * lead[c]) % p
        rank += 1
        if rank == m:
            break
    return rank


def _matrix_rank(rows, field):
    if not rows or not rows[0]:
        return 0
    if field is None:
        return rank_int(rows)
    return rank_mod(rows, field)


def boundary_matrix(lower, upper):
    """Boundary map from span(upper) to span(lower), faces given as masks.

    Row per lower face, column per upper face; the sign of the entry for
    dropping the t-th smallest vertex is (-1)^t.
    """
    index = {m: r for r, m in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for t, b in enumerate(iter_bits(face)):
            rows[index[face ^ b]][c] = (-1) ** t
    return rows


def reduced_betti_from_layers(layers, field=None):
    """Reduced homology ranks of a face set grouped by cardinality.

    `layers[k]` lists the faces with k vertices; layers[0] must be [0] (the
    empty face). Returns ranks indexed by dimension, starting at -1.
    """
    counts = [len(layer) for layer in layers]
    top = len(layers) - 1
    bd_rank = [0] * (top + 2)
    for k in range(1, top + 1):
        bd_rank[k] = _matrix_rank(boundary_matrix(layers[k - 1], layers[k]), field)
    return [counts[k] - bd_rank[k] - bd_rank[k + 1] for k in range(top + 1)]


def reduced_betti_numbers(sc, field=None):
    """All reduced homology ranks of a complex, as {dimension: rank}, zeros kept."""
    if sc.void:
        return {}
    layers = faces_masks_by_card(sc.facets)
    ranks = reduced_betti_from_layers(layers, field)
    return {k - 1: ranks[k] for k in range(len(ranks))}


def reduced_homology_rank(sc, i, field=None):
    """Rank of the i-th reduced homology over Q (field=None) or F_p (field=p).

    The void complex has no reduced homology at all; every rank is reported
    as 0 by convention.
    """
    if sc.void:
        return 0
    if not -1 <= i:
        raise PreconditionError(f"homological dimension {i} below -1")
    ranks = reduced_betti_numbers(sc, field)
    return ranks.get(i, 0)
