"""Graded Betti numbers of face rings, computed as an independent oracle.

The table of beta_{i,j} over a chosen field is assembled from reduced
homology ranks of all induced subcomplexes: a subset W of the ground set
contributes its (|W|-i-1)-dimensional rank to beta_{i,|W|}. The i = 0 slot
collapses to the single entry beta_{0,0} = 1 (the module itself), so the
table resolves the quotient ring, with the ideal's generators at i = 1.

Purity and linearity of the resolution are read off the table, and
Cohen-Macaulayness is decided twice: by vanishing of link homology below
top dimension, and by linearity of the dual complex's table. The two
routes must agree; a mismatch raises.
"""

from dataclasses import dataclass

from .alexander import alexander_dual
from .complexes import faces_masks_by_card
from .errors import PreconditionError, ResourceLimitError
from .homology import reduced_betti_from_layers

HOCHSTER_MAX_N = 22  # 2^n induced subcomplexes; beyond this the scan is hopeless


@dataclass(frozen=True)
class GradedBettiTable:
    n: int
    entries: dict  # (i, j) -> positive integer
    field: object = None  # None for the rationals, else a prime p

    @property
    def field_spec(self):
        return "rationals" if self.field is None else f"prime {self.field}"

    @property
    def proj_dim(self):
        return max(i for i, _ in self.entries)

    def entry(self, i, j):
        return self.entries.get((i, j), 0)

    def total(self, i):
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def triples(self):
        return sorted((i, j, v) for (i, j), v in self.entries.items())

    def max_slope(self):
        return max((j - i for i, j in self.entries), default=0)

    def diagram(self):
        """Dense triangle: one row per homological index, columns by j - i."""
        width = self.max_slope()
        cells = {}
        for (i, j), v in self.entries.items():
            cells[(i, j - i)] = v
        colw = max(len(str(v)) for v in self.entries.values())
        colw = max(colw, len(str(width)), 1) + 2
        head = " " * 6 + "".join(str(k).rjust(colw) for k in range(width + 1))
        lines = [head]
        for i in range(self.proj_dim + 1):
            row = f"{i:>4}: " + "".join(
                str(cells.get((i, k), ".")).rjust(colw) for k in range(width + 1)
            )
            lines.append(row)
        return "\n".join(lines)


def _maximal_masks(masks):
    kept = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def hochster_betti(sc, field=None):
    """Graded Betti table of the face ring over Q (field=None) or F_p.

    Work is one homology computation per induced subcomplex, with two
    shortcuts: distinct subsets sharing a restriction reuse the cached
    ranks, and restrictions that are cones (all maximal faces share a
    vertex) are skipped outright since their homology vanishes.
    """
    if sc.void:
        raise PreconditionError("the void complex has a zero face ring")
    if sc.n > HOCHSTER_MAX_N:
        raise ResourceLimitError(
            f"ground set of size {sc.n} exceeds the induced-subcomplex scan bound {HOCHSTER_MAX_N}"
        )
    facets = sc.facets
    table = {}
    cache = {}
    for w in range(1 << sc.n):
        restricted = _maximal_masks(f & w for f in facets) if facets else [0]
        if len(restricted) == 1 and restricted[0] != 0:
            continue  # a simplex (possibly just a vertex) is a cone
        common = ~0
        for m in restricted:
            common &= m
        if common != 0:
            continue  # cone point shared by every maximal face
        key = tuple(restricted)
        ranks = cache.get(key)
        if ranks is None:
            ranks = reduced_betti_from_layers(faces_masks_by_card(restricted), field)
            cache[key] = ranks
        j = w.bit_count()
        for card, rank in enumerate(ranks):
            if rank:
                pos = (j - card, j)
                table[pos] = table.get(pos, 0) + rank
    return GradedBettiTable(sc.n, table, field)


@dataclass(frozen=True)
class ResolutionShape:
    """Shape of a minimal graded free resolution of a cyclic quotient.

    `degrees` lists the single shift of each step past the ring itself, so
    `degrees[0]` is the common degree of the ideal generators and
    `steps == len(degrees) - 1`. `proj_dim` counts the full length including
    the generator step; for the zero ideal it is 0 and `degrees` is empty.
    """

    is_pure: bool
    degrees: tuple = ()
    is_linear: bool = False
    linear_start: object = None
    proj_dim: int = 0

    @property
    def steps(self):
        return len(self.degrees) - 1


def classify_resolution(table):
    """Read purity and linearity off a graded Betti table."""
    if table.entry(0, 0) != 1 or any(i == 0 and j != 0 for (i, j) in table.entries):
        raise PreconditionError("table must resolve a cyclic quotient (single generator in degree 0)")
    pd = table.proj_dim
    if pd == 0:
        return ResolutionShape(is_pure=True, degrees=(), is_linear=True, proj_dim=0)
    degrees = []
    for i in range(1, pd + 1):
        js = sorted(j for (ii, j) in table.entries if ii == i)
        if len(js) != 1:
            return ResolutionShape(is_pure=False, proj_dim=pd)
        degrees.append(js[0])
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        return ResolutionShape(is_pure=False, proj_dim=pd)
    start = degrees[0]
    linear = all(dj == start + i for i, dj in enumerate(degrees))
    return ResolutionShape(
        is_pure=True,
        degrees=tuple(degrees),
        is_linear=linear,
        linear_start=start if linear else None,
        proj_dim=pd,
    )


def pure_betti_sequence(table):
    """Betti numbers of a pure table, one per step past the ring summand.

    Entry i is the rank at homological index i+1, sitting in the single
    degree degrees[i]; raises when the table is not pure.
    """
    shape = classify_resolution(table)
    if not shape.is_pure:
        raise PreconditionError("table is not pure")
    return tuple(table.entry(i + 1, dj) for i, dj in enumerate(shape.degrees))


def _link_maximal(facets, face):
    linked = [f & ~face for f in facets if f & face == face]
    return _maximal_masks(linked)


def reisner_cohen_macaulay(sc, field=None):
    """Vanishing of every link's reduced homology below its top dimension."""
    if sc.void:
        raise PreconditionError("the void complex is out of scope here")
    if not sc.facets:
        return True  # {emptyset}: the face ring is the ground field
    layers = faces_masks_by_card(sc.facets)
    for card_layer in layers:
        for face in card_layer:
            mx = _link_maximal(sc.facets, face)
            if len(mx) == 1:
                continue  # the link is a simplex or {emptyset}; nothing can fail
            common = ~0
            for m in mx:
                common &= m
            if common:
                continue  # cone link, contractible
            link_layers = faces_masks_by_card(mx)
            top = len(link_layers) - 1
            ranks = reduced_betti_from_layers(link_layers, field)
            if any(ranks[k] for k in range(top)):
                return False
    return True


def dual_linearity_cohen_macaulay(sc, field=None):
    """Cohen-Macaulay exactly when the dual complex's table is linear.

    The full simplex has a void dual and a polynomial face ring; it is
    handled directly.
    """
    if sc.void:
        raise PreconditionError("the void complex is out of scope here")
    if sc.is_full_simplex:
        return True
    dual = alexander_dual(sc)
    shape = classify_resolution(hochster_betti(dual, field))
    if not shape.is_linear:
        return False
    if shape.degrees and shape.linear_start != sc.n - sc.d:
        raise RuntimeError("linear dual table with unexpected starting degree")
    return True


def is_cohen_macaulay(sc, field=None):
    """Cohen-Macaulayness over the chosen field; both criteria must agree."""
    a = reisner_cohen_macaulay(sc, field)
    b = dual_linearity_cohen_macaulay(sc, field)
    if a != b:
        raise RuntimeError(
            f"link-homology and dual-linearity criteria disagree ({a} vs {b}) on {sc!r}"
        )
    return a
