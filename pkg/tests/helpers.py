"""Brute-force oracles for the test suite.

Everything here is recomputed from first principles over frozensets of
vertices, independent of the package's bitmask machinery, so a library bug
cannot cancel against itself. Sympy supplies the polynomial-expansion and
exact-rank second opinions.
"""

from itertools import chain, combinations, combinations_with_replacement, permutations

import sympy


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def faces_from_facets(facet_sets):
    """All faces spanned by the given facets, as a set of frozensets (with the empty face)."""
    faces = {frozenset()}
    for fac in facet_sets:
        for sub in powerset(fac):
            faces.add(frozenset(sub))
    return faces


def complex_faces(sc):
    """Face set of a library complex, recomputed by subset scan."""
    if sc.void:
        return set()
    return faces_from_facets(sc.facet_vertex_sets())


def brute_f_entries(sc):
    faces = complex_faces(sc)
    if not faces:
        return (0,)
    top = max(len(f) for f in faces)
    return tuple(sum(1 for f in faces if len(f) == k) for k in range(top + 1))


def sympy_h_entries(f_entries):
    """h-vector via expanding sum_i f_{i-1} t^i (1-t)^(d-i) with sympy."""
    t = sympy.symbols("t")
    d = len(f_entries) - 1
    expr = sympy.expand(
        sum(f_entries[i] * t**i * (1 - t) ** (d - i) for i in range(d + 1))
    )
    poly = sympy.Poly(expr, t) if expr != 0 else None
    coeffs = [0] * (d + 1)
    if poly is not None:
        for (e,), c in poly.terms():
            coeffs[e] = int(c)
    return tuple(coeffs)


def brute_dual_facets(sc):
    """Facets of the Alexander dual by scanning all 2^n subsets.

    A dual equal to {emptyset} is reported with no facets, matching the
    library storage convention for the irrelevant complex.
    """
    universe = frozenset(range(1, sc.n + 1))
    faces = complex_faces(sc)
    dual_faces = [
        frozenset(w)
        for w in powerset(universe)
        if frozenset(universe - set(w)) not in faces
    ]
    maximal = [
        w for w in dual_faces if not any(w < other for other in dual_faces)
    ]
    if maximal == [frozenset()]:
        return []
    return sorted(tuple(sorted(w)) for w in maximal)


def library_facets(sc):
    return sorted(tuple(vs) for vs in sc.facet_vertex_sets())


def brute_is_leaf(facet, facets):
    others = [g for g in facets if g != facet]
    if not others:
        return True
    return any(
        all((h & facet) <= (g & facet) for h in others) for g in others
    )


def brute_has_leaf_order(facets):
    """Search all permutations for a leaf order; None when there is none."""
    facets = [frozenset(f) for f in facets]
    for perm in permutations(facets):
        if all(brute_is_leaf(perm[i], perm[: i + 1]) for i in range(len(perm))):
            return list(perm)
    return None


def replay_leaf_order(order_sets):
    """Check a claimed leaf order directly against the definition."""
    order = [frozenset(f) for f in order_sets]
    return all(brute_is_leaf(order[i], order[: i + 1]) for i in range(len(order)))


def naive_is_chordal(g):
    """No induced cycle of length >= 4, by scanning all vertex subsets."""
    edges = {frozenset(e) for e in g.edges}
    for size in range(4, g.n + 1):
        for sub in combinations(range(1, g.n + 1), size):
            inside = [e for e in edges if e <= set(sub)]
            degs = {v: 0 for v in sub}
            for e in inside:
                for v in e:
                    degs[v] += 1
            if len(inside) != size or any(d != 2 for d in degs.values()):
                continue
            # degree-2 regular with |E| = |V|: a disjoint union of cycles;
            # connected check makes it a single induced cycle
            seen = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                v = frontier.pop()
                for e in inside:
                    if v in e:
                        (w,) = e - {v}
                        if w not in seen:
                            seen.add(w)
                            frontier.append(w)
            if len(seen) == size:
                return False
    return True


def brute_max_cliques(g):
    """Maximal cliques by scanning all vertex subsets."""
    edges = {frozenset(e) for e in g.edges}
    cliques = [
        frozenset(sub)
        for sub in powerset(range(1, g.n + 1))
        if sub and all(frozenset(p) in edges for p in combinations(sub, 2))
    ]
    maximal = [c for c in cliques if not any(c < other for other in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_minimal_nonfaces(sc):
    faces = complex_faces(sc)
    nonfaces = [
        frozenset(s)
        for s in powerset(range(1, sc.n + 1))
        if frozenset(s) not in faces
    ]
    minimal = [s for s in nonfaces if not any(other < s for other in nonfaces)]
    return sorted(tuple(sorted(s)) for s in minimal)


def count_monomials_on_faces(sc, degree):
    """Dimension of the degree-s piece of the face ring, counted monomial by monomial."""
    faces = complex_faces(sc)
    if degree == 0:
        return 1 if faces else 0
    count = 0
    for combo in combinations_with_replacement(range(1, sc.n + 1), degree):
        if frozenset(combo) in faces:
            count += 1
    return count


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()
