"""Simple undirected graphs on {1..n} and their bridges into complexes:
complements, clique complexes, chordality with certificates, and a seeded
chordal-instance generator.
"""

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .bits import iter_bits
from .complexes import build_complex
from .errors import PreconditionError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of (u, v) tuples with u < v

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge {e} on [1,{self.n}]")

    @staticmethod
    def from_edges(n, pairs):
        norm = frozenset((min(u, v), max(u, v)) for u, v in pairs)
        for u, v in norm:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
        return Graph(n, norm)

    def adjacency_masks(self):
        """adj[v] = bitmask of neighbours of v, for v in 1..n (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return adj

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)


def complement(g):
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    missing = [
        (u, v)
        for u, v in combinations(range(1, g.n + 1), 2)
        if (u, v) not in g.edges
    ]
    return Graph(g.n, frozenset(missing))


def _maximal_cliques(n, adj):
    # Bron-Kerbosch with pivoting on bitmasks; exponential worst case is
    # acceptable at the ground-set sizes this package targets
    out = []

    def expand(r, p, x):
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(
            iter_bits(pivot_pool),
            key=lambda b: (p & adj[b.bit_length()]).bit_count(),
        )
        cand = p & ~adj[pivot.bit_length()]
        for b in iter_bits(cand):
            nb = adj[b.bit_length()]
            expand(r | b, p & nb, x & nb)
            p &= ~b
            x |= b

    expand(0, (1 << n) - 1, 0)
    return out


def clique_complex(g):
    """Complex whose faces are the cliques of g; facets are the maximal cliques."""
    cliques = _maximal_cliques(g.n, g.adjacency_masks())
    return build_complex(g.n, cliques)


def one_skeleton(sc):
    """Graph of the 0- and 1-faces of a complex."""
    if sc.void:
        raise PreconditionError("the void complex has no 1-skeleton")
    edges = set()
    for f in sc.facets:
        vs = [b.bit_length() for b in iter_bits(f)]
        edges.update(combinations(vs, 2))
    return Graph(sc.n, frozenset(edges))


def _mcs_elimination_order(g):
    # maximum cardinality search; returns vertices in elimination order
    adj = g.adjacency_masks()
    weight = [0] * (g.n + 1)
    visited = 0
    visit = []
    for _ in range(g.n):
        v = max(
            (u for u in range(1, g.n + 1) if not (visited >> (u - 1)) & 1),
            key=lambda u: weight[u],
        )
        visit.append(v)
        visited |= 1 << (v - 1)
        for b in iter_bits(adj[v] & ~visited):
            weight[b.bit_length()] += 1
    visit.reverse()
    return visit


def _check_elimination_order(g, order):
    # order is perfect iff each vertex's later neighbourhood is a clique;
    # it suffices to check against the earliest later neighbour
    adj = g.adjacency_masks()
    pos = {v: i for i, v in enumerate(order)}
    for idx, v in enumerate(order):
        later = [w for w in (b.bit_length() for b in iter_bits(adj[v])) if pos[w] > idx]
        if len(later) <= 1:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and not (adj[u] >> (w - 1)) & 1:
                return False
    return True


def _find_chordless_cycle(g):
    # scan triples (b; a, c) with a, c nonadjacent neighbours of b and join a
    # to c by a shortest path avoiding the rest of N[b]; shortest-ness makes
    # the resulting cycle chord-free
    adj = g.adjacency_masks()
    for b in range(1, g.n + 1):
        nbrs = [x.bit_length() for x in iter_bits(adj[b])]
        for a, c in combinations(nbrs, 2):
            if (adj[a] >> (c - 1)) & 1:
                continue
            banned = (adj[b] | (1 << (b - 1))) & ~(1 << (a - 1)) & ~(1 << (c - 1))
            prev = {a: None}
            queue = deque([a])
            while queue:
                x = queue.popleft()
                if x == c:
                    break
                for nb in iter_bits(adj[x] & ~banned):
                    w = nb.bit_length()
                    if w not in prev:
                        prev[w] = x
                        queue.append(w)
            if c in prev:
                path = []
                x = c
                while x is not None:
                    path.append(x)
                    x = prev[x]
                path.append(b)
                return tuple(reversed(path))
    return None


def is_chordal(g):
    """Decide chordality; return (flag, witness).

    On success the witness is a perfect elimination order produced by
    maximum cardinality search. On failure it is a chordless cycle of
    length at least 4, listed in cyclic order.
    """
    order = _mcs_elimination_order(g)
    if _check_elimination_order(g, order):
        return True, tuple(order)
    cycle = _find_chordless_cycle(g)
    if cycle is None:
        raise RuntimeError("elimination check failed but no chordless cycle found")
    return False, cycle


def random_chordal(n, density, seed):
    """Seeded chordal graph: random base edges, then elimination fill-in.

    A random graph with the given edge density is triangulated along a random
    elimination order, which guarantees chordality by construction; density
    steers the expected edge count of the base graph.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    adj = [set() for _ in range(n + 1)]
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < density:
            adj[u].add(v)
            adj[v].add(u)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    alive = set(order)
    edges = set()
    for v in order:
        alive.discard(v)
        later = sorted(adj[v] & alive)
        for u in later:
            edges.add((min(u, v), max(u, v)))
        for a, b in combinations(later, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
    for a, b in combinations(range(1, n + 1), 2):
        if b in adj[a]:
            edges.add((a, b))
    return Graph(n, frozenset(edges))


__all__ = [
    "Graph",
    "complement",
    "clique_complex",
    "one_skeleton",
    "is_chordal",
    "random_chordal",
]
