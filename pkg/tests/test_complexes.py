import random

import pytest

from facering import (
    FVector,
    HVector,
    PreconditionError,
    SimplicialComplex,
    build_complex,
    f_from_h,
    f_vector,
    faces_by_dimension,
    h_from_f,
    is_quasi_forest,
    minimal_nonfaces,
    quasi_forest_sequence,
)
from facering.generators import all_complexes, random_complex

from helpers import (
    brute_f_entries,
    brute_has_leaf_order,
    brute_minimal_nonfaces,
    library_facets,
    replay_leaf_order,
    sympy_h_entries,
)


def test_build_absorbs_duplicates_and_subsets():
    sc = build_complex(3, [[1, 2], [1, 2], [1]])
    assert library_facets(sc) == [(1, 2)]


def test_build_keeps_incomparable_facets():
    sc = build_complex(4, [[1, 2], [3, 4]])
    assert library_facets(sc) == [(1, 2), (3, 4)]


def test_build_absorbs_single_vertex():
    sc = build_complex(3, [[1, 2], [1, 3], [2, 3], [1]])
    assert library_facets(sc) == [(1, 2), (1, 3), (2, 3)]


def test_build_rejects_out_of_range_vertex():
    with pytest.raises(ValueError):
        build_complex(3, [[1, 4]])
    with pytest.raises(ValueError):
        build_complex(64, [[1]])


def test_void_vs_irrelevant():
    void = build_complex(3, [])
    irr = build_complex(3, [[]])
    assert void.void and not irr.void
    assert void != irr
    assert f_vector(void).entries == (0,)
    assert f_vector(irr).entries == (1,)
    assert irr.dim == -1
    with pytest.raises(PreconditionError):
        void.dim


def test_canonical_facet_order():
    from facering.bits import facet_sort_key

    sc = build_complex(5, [[2, 3, 4], [1, 5], [1, 2]])
    assert library_facets(sc) == [(1, 2), (1, 5), (2, 3, 4)]
    assert list(sc.facets) == sorted(sc.facets, key=facet_sort_key)


def test_faces_by_dimension_triangle_boundary():
    sc = build_complex(3, [[1, 2], [1, 3], [2, 3]])
    faces = faces_by_dimension(sc)
    assert {d: len(v) for d, v in faces.items()} == {-1: 1, 0: 3, 1: 3}
    assert faces[-1] == [()]


def test_faces_by_dimension_void_and_simplex():
    assert faces_by_dimension(build_complex(3, [])) == {}
    full = faces_by_dimension(build_complex(3, [[1, 2, 3]]))
    assert sum(len(v) for v in full.values()) == 8


def test_f_vector_examples():
    assert f_vector(build_complex(3, [[1, 2], [1, 3], [2, 3]])).entries == (1, 3, 3)
    assert f_vector(build_complex(3, [[1, 2, 3]])).entries == (1, 3, 3, 1)
    assert f_vector(build_complex(4, [[1, 2], [3, 4]])).entries == (1, 4, 2)


def test_f_vector_matches_subset_scan_exhaustively():
    for n in range(1, 5):
        for sc in all_complexes(n, include_void=True):
            assert f_vector(sc).entries == brute_f_entries(sc)


def test_face_counts_match_f_vector():
    for seed in range(30):
        sc = random_complex(7, seed)
        faces = faces_by_dimension(sc)
        f = f_vector(sc)
        assert all(f.entries[d + 1] == len(v) for d, v in faces.items())


def test_h_from_f_examples():
    assert h_from_f(FVector((1, 3, 3))).entries == (1, 1, 1)
    assert h_from_f(FVector((1, 3, 3, 1))).entries == (1, 0, 0, 0)
    assert h_from_f(FVector((1, 4, 2))).entries == (1, 2, -1)


def test_f_from_h_examples():
    assert f_from_h(HVector((1, 1, 1))).entries == (1, 3, 3)
    assert f_from_h(HVector((1, 0, 0, 0))).entries == (1, 3, 3, 1)
    assert f_from_h(HVector((1, 2, -1))).entries == (1, 4, 2)


def test_h_from_f_matches_polynomial_expansion():
    for n in range(1, 6):
        for sc in all_complexes(n):
            f = f_vector(sc)
            assert h_from_f(f).entries == sympy_h_entries(f.entries)


def test_round_trip_and_h_invariants():
    rng = random.Random(4)
    checked = 0
    for n in range(1, 11):
        for _ in range(40):
            sc = random_complex(n, rng.randrange(10**9))
            f = f_vector(sc)
            h = h_from_f(f)
            assert f_from_h(h).entries == f.entries
            assert sum(h.entries) == f.entries[-1]
            assert h.entries[0] == 1
            if h.d >= 1:
                assert h.entries[1] == f.entries[1] - f.d
            checked += 1
    assert checked == 400


def test_h_rejects_void():
    with pytest.raises(PreconditionError):
        h_from_f(FVector((0,)))


def test_minimal_nonfaces_examples():
    tri = build_complex(3, [[1, 2], [1, 3], [2, 3]])
    assert brute_minimal_nonfaces(tri) == [(1, 2, 3)]
    two = build_complex(4, [[1, 2], [3, 4]])
    assert brute_minimal_nonfaces(two) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert minimal_nonfaces(build_complex(3, [[1, 2, 3]])) == []


def test_minimal_nonfaces_match_subset_scan():
    from facering.bits import verts_of

    for n in range(1, 5):
        for sc in all_complexes(n):
            got = sorted(verts_of(m) for m in minimal_nonfaces(sc))
            assert got == brute_minimal_nonfaces(sc)


def test_quasi_forest_examples():
    from facering.bits import verts_of

    ok, order = is_quasi_forest(build_complex(3, [[1, 2], [2, 3]]))
    assert ok and sorted(verts_of(m) for m in order) == [(1, 2), (2, 3)]
    assert replay_leaf_order([set(verts_of(m)) for m in order])
    ok, order = is_quasi_forest(build_complex(3, [[1, 2], [1, 3], [2, 3]]))
    assert not ok and order is None
    ok, order = is_quasi_forest(build_complex(3, [[1, 2, 3]]))
    assert ok and len(order) == 1


def test_quasi_forest_agrees_with_permutation_search():
    from facering.bits import verts_of

    for n in range(1, 5):
        for sc in all_complexes(n):
            facet_sets = [set(vs) for vs in sc.facet_vertex_sets()]
            expect = brute_has_leaf_order(facet_sets) is not None
            got, order = is_quasi_forest(sc)
            assert got == expect, sc
            if got:
                assert replay_leaf_order([set(verts_of(m)) for m in order])


def test_returned_leaf_orders_replay():
    from facering.bits import verts_of

    for seed in range(50):
        sc = random_complex(7, seed)
        got, order = is_quasi_forest(sc)
        if got:
            assert len(order) == len(sc.facets)
            assert replay_leaf_order([set(verts_of(m)) for m in order])


def test_quasi_forest_sequence_examples():
    c, tails = quasi_forest_sequence(FVector((1, 3, 2)))
    assert c == (0, -1, 2) and tails == (1, 2)
    c, tails = quasi_forest_sequence(FVector((1, 3, 3, 1)))
    assert c == (0, 0, 0, 1) and tails == (1, 1, 1)
    c, tails = quasi_forest_sequence(FVector((1, 3, 3)))
    assert c == (1, -3, 3) and tails == (0, 3)


def test_quasi_forest_sequence_matches_sympy_expansion():
    import sympy

    x = sympy.symbols("x")
    for seed in range(25):
        f = f_vector(random_complex(6, seed))
        c, tails = quasi_forest_sequence(f)
        expr = sympy.expand(sum(f.entries[i] * (x - 1) ** i for i in range(f.d + 1)))
        expect = [int(expr.coeff(x, e)) for e in range(f.d + 1)]
        assert list(c) == expect
        assert list(tails) == [sum(expect[k:]) for k in range(1, f.d + 1)]


def test_exploratory_tail_sums_versus_leaf_orders():
    """Compare tail-sum positivity with leaf-order recognition on all small
    complexes with strictly positive face counts; report only, no assertion
    on agreement."""
    agree = disagree = 0
    for n in range(1, 6):
        for sc in all_complexes(n):
            f = f_vector(sc)
            if any(e <= 0 for e in f.entries):
                continue
            _, tails = quasi_forest_sequence(f)
            positive = all(t > 0 for t in tails)
            recognized, _ = is_quasi_forest(sc)
            if positive == recognized:
                agree += 1
            else:
                disagree += 1
    total = agree + disagree
    print(f"\ntail-sum positivity vs leaf order on n<=5: {agree}/{total} agree, {disagree} disagree")
    assert total > 0
