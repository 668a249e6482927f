import json
from itertools import combinations, permutations

import pytest

from conftest import seeded
from crownlab import (
    AltCycle,
    CrownDomainError,
    PairSet,
    ResourceGuardError,
    adjacent,
    build_graph,
    chromatic_number,
    enumerate_inc,
    enumerate_maximal_independent,
    enumerate_maximal_reversible,
    enumerate_min_nonreversible,
    inc_pairs,
    inr_extremal,
    is_independent,
    is_maximal_independent,
    is_maximal_reversible,
    is_reversible,
    is_strict,
    make_crown,
    max_independent_set,
    max_inr_set,
    max_reversible_set,
    min_reversible_cover,
    phi_set,
    recover_sigma,
    strict_cycles,
    tau_set,
    verify_battery,
)
from crownlab.guards import GUARD_DEFAULTS, set_nk_override
from crownlab.solvers import random_independent_set, random_independent_subset

SMALL = [(3, 0), (3, 1), (4, 1), (3, 2), (4, 2)]
ALPHA = {(3, 0): 1, (3, 1): 3, (4, 1): 3, (3, 2): 6, (4, 2): 6}
CHI = {(3, 0): 3, (3, 1): 3, (4, 1): 4, (3, 2): 3, (4, 2): 3}


@pytest.fixture(autouse=True)
def clear_guard_override():
    set_nk_override(None)
    yield
    set_nk_override(None)


def test_max_independent_set_values_and_witnesses():
    for (n, k) in SMALL:
        c = make_crown(n, k)
        rep = max_independent_set(build_graph(c))
        assert rep.value == ALPHA[(n, k)]
        assert rep.quantity == "alpha"
        assert len(rep.witness.pairs) == rep.value
        assert is_independent(c, rep.witness)


def test_chromatic_number_values_and_proper_witness():
    for (n, k) in SMALL:
        c = make_crown(n, k)
        rep = chromatic_number(build_graph(c))
        assert rep.value == CHI[(n, k)]
        classes = rep.witness
        assert len(classes) == rep.value
        all_pairs = []
        for cls in classes:
            for p, q in combinations(cls.pairs, 2):
                assert not adjacent(c, p, q)
            all_pairs.extend(cls.pairs)
        assert sorted(all_pairs) == sorted(enumerate_inc(c).pairs)


def test_max_reversible_value_with_canonical_witness():
    for (n, k) in SMALL:
        c = make_crown(n, k)
        rep = max_reversible_set(c)
        assert rep.value == (k + 1) * (k + 2) // 2
        assert is_reversible(c, rep.witness)
        assert recover_sigma(c, rep.witness) is not None


def test_min_reversible_cover_matches_dimension():
    dims = {(3, 0): 3, (3, 1): 3, (4, 1): 4, (3, 2): 3, (4, 2): 3}
    for (n, k), want in dims.items():
        c = make_crown(n, k)
        rep = min_reversible_cover(c)
        assert rep.value == want
        cover = rep.witness
        assert len(cover.parts) == want
        covered = set()
        for part in cover.parts:
            assert is_reversible(c, part)
            covered |= set(part.pairs)
        assert covered == set(enumerate_inc(c).pairs)


def test_max_inr_values():
    values = {(4, 2): 3, (4, 3): 8, (3, 3): 9, (5, 3): 5}
    for (n, k), want in values.items():
        c = make_crown(n, k)
        rep = max_inr_set(c)
        assert rep.value == want
        assert is_independent(c, rep.witness)
        assert not is_reversible(c, rep.witness)
        assert len(rep.witness.pairs) == want


def test_max_inr_none_when_no_cycles_fit():
    for (n, k) in [(3, 1), (5, 2), (4, 0)]:
        assert max_inr_set(make_crown(n, k)) is None


def test_maximal_reversible_census():
    censuses = {
        (3, 2): {6: 20},
        (3, 3): {10: 48, 8: 12},
        (3, 4): {15: 112, 13: 56, 12: 56},
    }
    for (n, k), want in censuses.items():
        c = make_crown(n, k)
        got = {}
        for R in enumerate_maximal_reversible(c):
            assert is_maximal_reversible(c, R)
            got[len(R.pairs)] = got.get(len(R.pairs), 0) + 1
        assert got == want


def test_maximal_independent_enumeration_is_complete():
    c = make_crown(3, 2)
    got = {S.members() for S in enumerate_maximal_independent(c)}
    # brute force over all subsets of the 15 critical pairs
    pool = inc_pairs(c)
    brute = set()
    for size in range(1, 8):
        for combo in combinations(pool, size):
            S = PairSet(c, combo)
            if is_maximal_independent(c, S):
                brute.add(S.members())
    assert got == brute


def test_strict_cycle_enumeration_matches_brute_force():
    c = make_crown(4, 3)
    got2 = set()
    got3 = set()
    for C in strict_cycles(c):
        assert is_strict(c, C)
        (got2 if len(C) == 2 else got3).add(frozenset(C.pairs))
        assert len(C) <= 2 * c.circle // c.n
    pool = inc_pairs(c)
    brute2 = {
        frozenset(combo)
        for combo in combinations(pool, 2)
        if _is_strict_set(c, combo)
    }
    brute3 = {
        frozenset(combo)
        for combo in combinations(pool, 3)
        if _is_strict_set(c, combo)
    }
    assert got2 == brute2 and got3 == brute3
    assert (len(got2), len(got3)) == (98, 98)


def _is_strict_set(c, pairs):
    first = pairs[0]
    for rest in permutations(pairs[1:]):
        order = (first,) + rest
        try:
            C = AltCycle(c, order)
        except CrownDomainError:
            continue
        if is_strict(c, C):
            return True
    return False


def test_min_nonreversible_sets_are_minimal():
    c = make_crown(3, 3)
    for S in enumerate_min_nonreversible(c, max_size=3):
        assert not is_reversible(c, S)
        for p in S.pairs:
            assert is_reversible(c, S.difference([p]))


def test_size_two_hyperedges_are_the_graph_edges():
    c = make_crown(3, 1)
    twos = {frozenset(S.pairs) for S in enumerate_min_nonreversible(c, 2)}
    edges = {frozenset(e) for e in build_graph(c).edges()}
    assert twos == edges
    assert len(twos) == 12


def test_strict_cycles_within_restriction():
    c = make_crown(3, 3)
    S = inr_extremal(c)
    inside = list(strict_cycles(c, within=S))
    assert inside
    for C in inside:
        assert C.as_pairset().issubset(S)


def test_guard_trips_and_override():
    big = make_crown(1000, 1)  # 2002 critical pairs, over the vertex cap
    with pytest.raises(ResourceGuardError):
        max_independent_set(build_graph(big))
    wide = make_crown(8, 6)  # n+k over the maxrev cap
    assert wide.circle > GUARD_DEFAULTS["maxrev_nk"]
    with pytest.raises(ResourceGuardError):
        max_reversible_set(wide)
    set_nk_override(5)
    with pytest.raises(ResourceGuardError):
        max_reversible_set(make_crown(4, 2))
    set_nk_override(None)
    max_reversible_set(make_crown(4, 2))


def test_random_independent_sets_are_reproducible():
    c = make_crown(5, 3)
    a = random_independent_set(c, seeded(42))
    b = random_independent_set(c, seeded(42))
    assert a.members() == b.members()
    assert is_independent(c, a)
    assert is_maximal_independent(c, a)
    sub = random_independent_subset(c, seeded(42))
    assert is_independent(c, sub)


def test_solve_report_serializes():
    c = make_crown(3, 2)
    rep = max_reversible_set(c)
    blob = json.dumps(rep.to_json())
    back = json.loads(blob)
    assert back["quantity"] == "maxrev" and back["value"] == 6
    assert (back["n"], back["k"]) == (3, 2)
    assert len(back["witness"]["pairs"]) == 6


def test_verify_battery_green():
    for (n, k) in [(3, 2), (4, 2), (4, 3)]:
        rep = verify_battery(make_crown(n, k), seed=1)
        failed = [chk.name for chk in rep.checks if chk.status == "fail"]
        assert rep.ok, failed
        blob = rep.to_json()
        assert blob["ok"] is True
        assert blob["counts"]["fail"] == 0


def test_symmetry_of_solutions():
    # optima are invariant under the circle automorphisms
    c = make_crown(4, 3)
    rep = max_inr_set(c)
    shifted = tau_set(c, 3, rep.witness)
    mirrored = phi_set(c, rep.witness)
    for img in (shifted, mirrored):
        assert is_independent(c, img)
        assert not is_reversible(c, img)
        assert len(img.pairs) == rep.value
