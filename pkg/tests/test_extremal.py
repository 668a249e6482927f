from itertools import permutations

import pytest

from crownlab import (
    DISJOINT_PROPERTY,
    OVERLAP_PROPERTY,
    AltCycle,
    CritPair,
    CrownDomainError,
    check_matching_conditions,
    classify_sac3,
    default_matching_spec,
    downset_of_cycle,
    inr_extremal,
    is_independent,
    is_maximal_independent,
    is_reversible,
    is_strict,
    make_crown,
    matching_cycle,
    max_pairs,
    minr_d3_certify,
    pair_size,
    phi_pair,
    sac3,
    tau_set,
)
from crownlab.extremal import MatchingCycleSpec


def cycle_arc_budget(crown, C):
    # sum of pair sizes plus gaps walks the circle once for a disjoint 3-cycle
    total = 0
    for alpha, p in enumerate(C.pairs):
        q = C.pairs[(alpha + 1) % 3]
        total += pair_size(crown, crown.a(p.a_index), crown.b(p.b_index))
        total += pair_size(crown, crown.b(p.b_index), crown.a(q.a_index))
    return total


def test_sac3_when_n_at_most_k():
    c = make_crown(3, 3)
    C = sac3(c)
    assert set(C.pairs) == {CritPair(1, 1), CritPair(2, 4), CritPair(5, 5)}
    assert is_strict(c, C)
    assert classify_sac3(c, C) == DISJOINT_PROPERTY
    assert is_independent(c, C.as_pairset())
    assert cycle_arc_budget(c, C) == c.circle + 6


def test_sac3_when_n_between_k_and_2k():
    c = make_crown(4, 2)
    C = sac3(c)
    assert set(C.pairs) == {CritPair(1, 1), CritPair(3, 3), CritPair(5, 5)}
    assert is_strict(c, C)
    assert classify_sac3(c, C) == DISJOINT_PROPERTY
    assert cycle_arc_budget(c, C) == c.circle + 6


def test_sac3_mirror_has_the_overlap_arrangement():
    for (n, k) in [(3, 3), (4, 3), (5, 4)]:
        c = make_crown(n, k)
        C = sac3(c)
        mirror = AltCycle(c, tuple(phi_pair(c, p) for p in C.pairs))
        assert classify_sac3(c, mirror) == OVERLAP_PROPERTY


def test_sac3_requires_some_cycle_to_exist():
    with pytest.raises(CrownDomainError):
        sac3(make_crown(5, 2))  # n > 2k: every independent set is reversible


def test_inr_extremal_sizes_and_status():
    cases = {(4, 2): 3, (4, 3): 8, (5, 3): 5, (3, 3): 9, (3, 4): 14}
    for (n, k), want in cases.items():
        c = make_crown(n, k)
        S = inr_extremal(c)
        assert len(S.pairs) == want
        assert is_maximal_independent(c, S)
        assert not is_reversible(c, S)
    with pytest.raises(CrownDomainError):
        inr_extremal(make_crown(3, 1))


def test_matching_spec_validation():
    c = make_crown(4, 3)
    MatchingCycleSpec(1, (2, 2, 1)).validate(c)
    with pytest.raises(CrownDomainError):
        MatchingCycleSpec(1, (2, 2, 2)).validate(c)  # wrong sum
    with pytest.raises(CrownDomainError):
        MatchingCycleSpec(4, (1,) * 9).validate(c)  # t(n-k) > k
    with pytest.raises(CrownDomainError):
        MatchingCycleSpec(1, (5, 1, 1)).validate(c)  # a size above k+1
    with pytest.raises(CrownDomainError):
        MatchingCycleSpec(1, (2, 2, 1)).validate(make_crown(3, 3))  # needs k < n


def test_default_specs_produce_valid_cycles():
    for (n, k) in [(4, 3), (5, 4), (6, 4)]:
        c = make_crown(n, k)
        t = 1
        while t * (n - k) <= k:
            spec = default_matching_spec(c, t)
            C = matching_cycle(c, spec)
            assert len(C) == 2 * t + 1
            assert check_matching_conditions(c, C)
            t += 1
    with pytest.raises(CrownDomainError):
        default_matching_spec(make_crown(4, 3), 4)


def test_every_valid_composition_yields_a_cycle():
    c = make_crown(5, 4)
    t = 2
    total = c.k + 2 * t + 1 - t * (c.n - c.k)

    def comps(left, parts):
        if parts == 1:
            yield (left,)
            return
        for first in range(1, left - parts + 2):
            for rest in comps(left - first, parts - 1):
                yield (first,) + rest

    count = 0
    for sizes in comps(total, 2 * t + 1):
        spec = MatchingCycleSpec(t, sizes)
        spec.validate(c)
        C = matching_cycle(c, spec)
        assert check_matching_conditions(c, C)
        count += 1
    assert count == 15


def test_matching_conditions_accept_nonstrict_cycles():
    # a 5-cycle that satisfies the conditions despite chords
    c = make_crown(4, 3)
    pairs = [(1, 2), (3, 3), (4, 4), (6, 6), (7, 7)]
    order = next(
        cand
        for cand in permutations(pairs[1:])
        for cand in [(tuple(pairs[0]),) + cand]
        if _alternates(c, cand)
    )
    C = AltCycle(c, order)
    assert not is_strict(c, C)
    assert check_matching_conditions(c, C)


def _alternates(crown, order):
    m, k = crown.circle, crown.k
    return all(
        (order[i - 1][1] - order[i][0]) % m > k for i in range(len(order))
    )


def test_matching_conditions_reject_even_or_small():
    c = make_crown(4, 3)
    with pytest.raises(CrownDomainError):
        check_matching_conditions(c, AltCycle(c, ((1, 1), (5, 5))))
    C = matching_cycle(c, MatchingCycleSpec(1, (2, 2, 1)))
    assert check_matching_conditions(c, C)


def test_printed_matching_cycle_at_47_42():
    c = make_crown(47, 42)
    spec = MatchingCycleSpec(3, (4, 8, 7, 7, 5, 1, 2))
    C = matching_cycle(c, spec)
    got = sorted((p.a_index, p.b_index) for p in C.pairs)
    assert got == [(1, 4), (13, 20), (25, 31), (37, 43), (51, 55), (67, 67), (78, 79)]
    assert check_matching_conditions(c, C)
    D = downset_of_cycle(c, C)
    assert len(D.pairs) == 121
    assert len(D.pairs) == sum(s * (s + 1) // 2 for s in spec.sizes)


def test_downset_is_maximal_independent_nonreversible():
    for (n, k) in [(4, 3), (5, 4)]:
        c = make_crown(n, k)
        C = matching_cycle(c, default_matching_spec(c, 1))
        D = downset_of_cycle(c, C)
        assert is_maximal_independent(c, D)
        assert not is_reversible(c, D)
        assert C.as_pairset().issubset(D)


def test_max_pairs_recovers_the_cycle():
    c = make_crown(4, 3)
    C = matching_cycle(c, MatchingCycleSpec(1, (2, 2, 1)))
    D = downset_of_cycle(c, C)
    assert set(max_pairs(c, D)) == set(C.pairs)


def test_minr_d3_certify_round_trip():
    for (n, k) in [(4, 3), (5, 4)]:
        c = make_crown(n, k)
        C = matching_cycle(c, default_matching_spec(c, 1))
        D = downset_of_cycle(c, C)
        got = minr_d3_certify(c, D)
        assert got is not None
        assert downset_of_cycle(c, got).members() == D.members()
        # certification is shift invariant
        shifted = tau_set(c, 2, D)
        assert minr_d3_certify(c, shifted) is not None


def test_minr_d3_certify_rejects_other_sets():
    c = make_crown(4, 3)
    from crownlab import canonical_set

    T = canonical_set(c, (1, 2, 3, 4))
    assert minr_d3_certify(c, T) is None
    with pytest.raises(CrownDomainError):
        minr_d3_certify(make_crown(3, 3), inr_extremal(make_crown(3, 3)))
