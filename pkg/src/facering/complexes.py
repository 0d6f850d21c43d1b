"""Simplicial complexes on {1..n}, stored exactly by their maximal faces.

A complex is kept as an antichain of facet bitmasks in a canonical order
(size, then lexicographic vertex list). The ground set is explicit and a
vertex is allowed to appear in no face at all; this matters for Alexander
duals, which routinely lack singletons. Two degenerate complexes are
distinguished: the void complex (no faces whatsoever) and the irrelevant
complex {emptyset} (whose only face is the empty set). Both are stored with
an empty facet tuple; the `void` flag tells them apart.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bits import facet_sort_key, mask_of, submasks, verts_of
from .errors import PreconditionError

MAX_VERTICES = 63  # facets must fit a single machine word


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple  # bitmasks, canonical order, pairwise incomparable, nonzero
    void: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"ground set size must be in [1, {MAX_VERTICES}], got {self.n}")
        full = (1 << self.n) - 1
        if self.void and self.facets:
            raise ValueError("void complex cannot have facets")
        for f in self.facets:
            if f == 0:
                raise ValueError("empty facet must be stored via the empty facet tuple")
            if f & ~full:
                raise ValueError("facet leaves the ground set")
        for a, b in combinations(self.facets, 2):
            if a & b == a or a & b == b:
                raise ValueError("facets must be pairwise incomparable")
        if list(self.facets) != sorted(self.facets, key=facet_sort_key):
            raise ValueError("facets not in canonical order")

    @property
    def is_irrelevant(self):
        return not self.void and not self.facets

    @property
    def is_full_simplex(self):
        return len(self.facets) == 1 and self.facets[0] == (1 << self.n) - 1

    @property
    def dim(self):
        if self.void:
            raise PreconditionError("the void complex has no dimension")
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def d(self):
        """dim + 1, the Krull dimension of the associated face ring."""
        return self.dim + 1

    def contains(self, mask):
        """Face membership test; the empty set is a face of any nonvoid complex."""
        if self.void:
            return False
        if mask == 0:
            return True
        return any(mask & ~f == 0 for f in self.facets)

    def facet_vertex_sets(self):
        return [verts_of(f) for f in self.facets]

    def __repr__(self):
        if self.void:
            return f"SimplicialComplex(n={self.n}, void)"
        body = ", ".join("{" + ",".join(map(str, verts_of(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"


@dataclass(frozen=True)
class FVector:
    """Face counts (f_-1, f_0, ..., f_{d-1}); all zero only for the void complex."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise ValueError("f-vector needs at least the f_-1 entry")
        if self.entries[0] not in (0, 1):
            raise ValueError("f_-1 must be 0 or 1")
        if any(e < 0 for e in self.entries):
            raise ValueError("face counts are nonnegative")
        if self.entries[0] == 0 and any(self.entries):
            raise ValueError("f_-1 = 0 forces the all-zero vector")

    @property
    def d(self):
        return len(self.entries) - 1

    @property
    def is_void(self):
        return self.entries[0] == 0

    def f(self, i):
        """f_i with out-of-range dimensions reading as 0."""
        k = i + 1
        return self.entries[k] if 0 <= k < len(self.entries) else 0


@dataclass(frozen=True)
class HVector:
    """Hilbert-series numerator coefficients (h_0, ..., h_d); entries may be negative."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise ValueError("h-vector needs at least h_0")

    @property
    def d(self):
        return len(self.entries) - 1

    def h(self, i):
        return self.entries[i] if 0 <= i < len(self.entries) else 0


def build_complex(n, candidate_facets):
    """Build the complex generated by the given vertex subsets.

    Duplicates and subsets of other candidates are absorbed; what remains is
    the canonical antichain of facets. No candidates at all yields the void
    complex; candidates that all collapse to the empty set yield {emptyset}.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"ground set size must be in [1, {MAX_VERTICES}], got {n}")
    masks = set()
    for cand in candidate_facets:
        mask = cand if isinstance(cand, int) else mask_of(cand)
        if mask < 0 or mask >> n:
            bad = [v for v in (verts_of(mask) if mask >= 0 else ()) if not 1 <= v <= n]
            raise ValueError(f"vertex index out of range [1,{n}]: {bad or mask}")
        masks.add(mask)
    if not masks:
        return SimplicialComplex(n, (), void=True)
    maximal = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
    if maximal == [0]:
        return SimplicialComplex(n, ())
    return SimplicialComplex(n, tuple(sorted(maximal, key=facet_sort_key)))


def faces_masks_by_card(facet_masks):
    """All faces of <facet_masks> grouped by cardinality, as sorted mask lists.

    The empty face (card 0) is always present; cost is O(sum over facets of
    2^|facet|) plus deduplication.
    """
    seen = set()
    for f in facet_masks:
        for s in submasks(f):
            seen.add(s)
    seen.add(0)
    by_card = {}
    for m in seen:
        by_card.setdefault(m.bit_count(), []).append(m)
    return [sorted(by_card.get(k, [])) for k in range(max(by_card) + 1)]


def faces_by_dimension(sc):
    """Every face exactly once, grouped by dimension; {} for the void complex."""
    if sc.void:
        return {}
    layers = faces_masks_by_card(sc.facets)
    return {k - 1: [verts_of(m) for m in layer] for k, layer in enumerate(layers)}


def f_vector(sc):
    if sc.void:
        return FVector((0,))
    layers = faces_masks_by_card(sc.facets)
    return FVector(tuple(len(layer) for layer in layers))


def h_from_f(f):
    """h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}, exact integers."""
    if f.is_void:
        raise PreconditionError("the void complex has no h-vector")
    d = f.d
    ent = [
        sum((-1) ** (j - i) * comb(d - i, j - i) * f.entries[i] for i in range(j + 1))
        for j in range(d + 1)
    ]
    return HVector(tuple(ent))


def f_from_h(h):
    """Exact inverse of h_from_f: f_{j-1} = sum_i C(d-i, j-i) h_i."""
    d = h.d
    ent = [
        sum(comb(d - i, j - i) * h.entries[i] for i in range(j + 1))
        for j in range(d + 1)
    ]
    return FVector(tuple(ent))


def minimal_nonfaces(sc):
    """Inclusion-minimal subsets of [n] that are not faces, in canonical order.

    These are the exponent sets of the minimal monomial generators of the
    face ring's defining ideal. A minimal non-face has cardinality at most
    dim+2, since dropping any vertex must give a face.
    """
    if sc.void:
        raise PreconditionError("the void complex has no non-face lattice")
    out = []
    top = min(sc.n, sc.d + 1)
    for k in range(1, top + 1):
        for verts in combinations(range(1, sc.n + 1), k):
            m = mask_of(verts)
            if sc.contains(m):
                continue
            if all(sc.contains(m & ~b) for b in (1 << (v - 1) for v in verts)):
                out.append(m)
    return sorted(out, key=facet_sort_key)


def _leaf_of(f, others):
    # f is a leaf iff one facet's overlap with f contains every other overlap,
    # i.e. some g has g & f equal to the union of all overlaps
    if not others:
        return True
    union = 0
    for h in others:
        union |= h & f
    return any(g & f == union for g in others)


def is_quasi_forest(sc):
    """Decide whether the facets admit a leaf order; return (flag, order).

    The order, when it exists, lists facet masks F_1..F_m such that each F_i
    is a leaf of the complex generated by F_1..F_i. Recognition peels leaves
    from the back: greedy first, then backtracking over which leaf to peel,
    memoizing facet subsets that cannot be completed.
    """
    if sc.void:
        raise PreconditionError("quasi-forest recognition needs a nonvoid complex")
    facets = list(sc.facets)
    m = len(facets)
    if m <= 1:
        return True, list(facets)

    def leaves_of(idx_set):
        rest = [facets[i] for i in idx_set]
        found = []
        for i in idx_set:
            others = [g for g in rest if g != facets[i]]
            if _leaf_of(facets[i], others):
                found.append(i)
        return found

    # greedy fast path: peel the first available leaf each round
    remaining = set(range(m))
    peeled = []
    while remaining:
        ls = leaves_of(remaining)
        if not ls:
            break
        remaining.discard(ls[0])
        peeled.append(ls[0])
    if not remaining:
        order = [facets[i] for i in reversed(peeled)]
        return True, order

    dead = set()

    def peel(idx_set):
        if not idx_set:
            return []
        if idx_set in dead:
            return None
        for i in leaves_of(idx_set):
            tail = peel(idx_set - {i})
            if tail is not None:
                return tail + [facets[i]]
        dead.add(idx_set)
        return None

    order = peel(frozenset(range(m)))
    if order is None:
        return False, None
    return True, order


def quasi_forest_sequence(f):
    """Expand sum_i f_{i-1} (x-1)^i; return its coefficients and tail sums.

    Returns (c, tails) where c = (c_0..c_d) and tails[k-1] = sum of c_i for
    i >= k, k = 1..d. The tail sums are exposed as data only; recognition of
    quasi-forests goes through the leaf-order definition.
    """
    from . import polynomials as poly

    d = f.d
    acc = []
    for i in range(d + 1):
        acc = poly.add(acc, poly.scale(poly.x_minus_one_power(i), f.entries[i]))
    c = tuple(acc + [0] * (d + 1 - len(acc)))
    tails = tuple(sum(c[k:]) for k in range(1, d + 1))
    return c, tails
