import json

import pytest

from conftest import seeded, small_crowns
from crownlab import (
    CritPair,
    CrownDomainError,
    PairSet,
    adjacent,
    build_graph,
    enumerate_inc,
    inc_pairs,
    is_independent,
    leq,
    make_crown,
    phi_set,
    projections,
    tau_set,
)
from crownlab.critpairs import I_a, I_b, as_pair, pair_elements


def test_critical_pair_count_formula():
    for c in small_crowns(9):
        assert len(inc_pairs(c)) == c.circle * (c.k + 1)


def test_rows_are_cyclic_intervals():
    c = make_crown(4, 3)
    assert I_a(c, 1) == (1, 2, 3, 4)
    assert I_a(c, 6) == (6, 7, 1, 2)
    assert I_b(c, 2) == (6, 7, 1, 2)
    assert I_b(c, 5) == (2, 3, 4, 5)


def test_pair_construction_and_normalization():
    c = make_crown(3, 2)
    p = as_pair(c, (6, 7))  # wraps to (1, 2)
    assert p == CritPair(1, 2)
    x, y = pair_elements(c, p)
    assert (x, y) == (c.a(1), c.b(2))
    with pytest.raises(CrownDomainError):
        as_pair(c, (1, 4))  # comparable, not critical


def test_pairset_set_operations_and_json():
    c = make_crown(3, 2)
    S = PairSet(c, [(1, 2), (1, 1), (2, 2)])
    assert [tuple(p) for p in S.pairs] == [(1, 1), (1, 2), (2, 2)]
    T = S.union([(3, 3)]).difference([(1, 2)])
    assert T.members() == frozenset({CritPair(1, 1), CritPair(2, 2), CritPair(3, 3)})
    assert PairSet(c, [(1, 1)]).issubset(S)
    assert not S.issubset(T)
    blob = json.dumps(S.to_json())
    again = PairSet.from_json(json.loads(blob))
    assert again.members() == S.members() and again.crown == c
    with pytest.raises(CrownDomainError):
        PairSet.from_json(S.to_json(), crown=make_crown(4, 2))
    with pytest.raises(CrownDomainError):
        PairSet(c, [(1, 4)])


def test_duplicate_pairs_collapse():
    c = make_crown(3, 1)
    S = PairSet(c, [(2, 2), (2, 2), (6, 2)])  # 6 wraps to 2
    assert len(S.pairs) == 1


def test_adjacency_is_two_element_alternating_cycle():
    c = make_crown(3, 2)
    for p in inc_pairs(c):
        with pytest.raises(CrownDomainError):
            adjacent(c, p, p)
        for q in inc_pairs(c):
            if p == q:
                continue
            want = leq(c, c.a(q.a_index), c.b(p.b_index)) and leq(
                c, c.a(p.a_index), c.b(q.b_index)
            )
            assert adjacent(c, p, q) == want


def test_graph_structure():
    c = make_crown(4, 1)
    g = build_graph(c)
    assert len(g.vertices) == 10
    es = list(g.edges())
    assert len(es) == g.edge_count
    for p, q in es:
        assert adjacent(c, p, q)
    # adjacency is symmetric and irreflexive in the mask rows
    for p in g.vertices:
        assert not g.adj[g.index[p]] >> g.index[p] & 1
        for q in g.neighbors(p):
            assert p in g.neighbors(q)
    dim = g.to_dimacs()
    head = dim.splitlines()[0].split()
    assert head[:2] == ["p", "edge"] and head[2:] == ["10", str(g.edge_count)]
    vm = g.vertex_map()
    assert len(vm) == 10


def test_is_independent_matches_pairwise_adjacency():
    c = make_crown(4, 2)
    rng = seeded(7)
    pool = list(inc_pairs(c))
    for _ in range(200):
        S = PairSet(c, rng.sample(pool, rng.randint(0, 6)))
        want = all(
            not adjacent(c, p, q) for i, p in enumerate(S.pairs) for q in S.pairs[i + 1 :]
        )
        assert is_independent(c, S) == want


def test_projections():
    c = make_crown(3, 2)
    S = PairSet(c, [(1, 1), (1, 2), (3, 3)])
    pr = projections(c, S)
    assert pr.a_support == (1, 3) and pr.b_support == (1, 2, 3)
    assert pr.b_of[1] == frozenset({1, 2})
    assert pr.a_of[3] == frozenset({3})
    assert pr.b_of[2] == frozenset()


def test_tau_and_phi_respect_adjacency():
    c = make_crown(4, 3)
    rng = seeded(3)
    pool = list(inc_pairs(c))
    full = enumerate_inc(c)
    assert tau_set(c, 2, full).members() == full.members()
    assert phi_set(c, full).members() == full.members()
    for _ in range(50):
        S = PairSet(c, rng.sample(pool, 5))
        for image in (tau_set(c, rng.randrange(c.circle), S), phi_set(c, S)):
            assert len(image.pairs) == 5
            assert is_independent(c, image) == is_independent(c, S)
