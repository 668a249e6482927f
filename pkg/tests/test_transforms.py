import pytest

from conftest import seeded
from crownlab import (
    AltCycle,
    CritPair,
    CrownDomainError,
    PairSet,
    blocking_pairs,
    canonical_set,
    cycle_gaps,
    fan,
    inr_extremal,
    is_independent,
    is_reversible,
    make_crown,
    minr_d3_certify,
    phi_pair,
    phi_set,
    reversibility_certificate,
    sac3,
    saturate_fans,
    spread,
    transform,
    transform_with_trace,
)
from crownlab.solvers import random_independent_set
from crownlab.transforms import (
    CONTRACTION,
    EXPANSION,
    OPS,
    StepTraceError,
    steps_to_json,
)


def downset_with_cycle(n, k):
    c = make_crown(n, k)
    S = inr_extremal(c)
    if c.k < c.n:
        C = minr_d3_certify(c, S)
    else:
        C = reversibility_certificate(c, S).cycle
    return c, S, C


def test_expansion_blocking_pairs_worked_case():
    # at (3,3): tops (a2,b4),(a1,b2),(a5,b5); expansion obstructions at 2
    c = make_crown(3, 3)
    S = inr_extremal(c)
    rep = blocking_pairs(c, EXPANSION, 2, S)
    assert rep.kind == EXPANSION and rep.position == 2
    assert rep.first_set.members() == {CritPair(2, 3), CritPair(2, 4)}
    assert rep.last_set.members() == {CritPair(5, 5)}


def test_dlef_lands_on_canonical_set():
    c = make_crown(3, 3)
    S = inr_extremal(c)
    out = transform(c, "DLEF", 2, S)
    assert out.members() == canonical_set(c, (1, 2, 3, 4)).members()
    assert is_reversible(c, out)
    other = transform(c, "DFEL", 2, S)
    assert len(out.pairs) + len(other.pairs) == 2 * len(S.pairs)
    assert is_independent(c, other)
    assert not is_reversible(c, other)


def test_trace_reports_exact_delta():
    c = make_crown(3, 3)
    S = inr_extremal(c)
    out, step = transform_with_trace(c, "DLEF", 2, S)
    assert step.op == "DLEF" and step.position == 2
    assert set(step.removed) == {CritPair(5, 5)}
    assert set(step.added) == {CritPair(1, 3), CritPair(1, 4)}
    rebuilt = S.difference(step.removed).union(step.added)
    assert rebuilt.members() == out.members()
    [j] = steps_to_json([step])
    assert j == {
        "op": "DLEF",
        "position": 2,
        "removed": [[5, 5]],
        "added": [[1, 3], [1, 4]],
    }


def test_no_blocking_pairs_means_identity():
    c = make_crown(3, 3)
    T = canonical_set(c, (1, 2, 3, 4))
    rep = blocking_pairs(c, CONTRACTION, 2, T)
    assert len(rep.first_set) == 0 and len(rep.last_set) == 0
    out, step = transform_with_trace(c, "DFCL", 2, T)
    assert out.members() == T.members()
    assert step.removed == () and step.added == ()


def test_size_sum_identities_random():
    rng = seeded(17)
    for (n, k) in [(3, 2), (4, 3), (5, 2)]:
        c = make_crown(n, k)
        for _ in range(60):
            S = random_independent_set(c, rng)
            i = rng.randrange(1, c.circle + 1)
            sizes = {op: len(transform(c, op, i, S).pairs) for op in OPS}
            assert sizes["DFCL"] + sizes["DLCF"] == 2 * len(S.pairs)
            assert sizes["DFEL"] + sizes["DLEF"] == 2 * len(S.pairs)
            for op in OPS:
                assert is_independent(c, transform(c, op, i, S))


def test_transforms_reject_dependent_sets():
    c = make_crown(3, 2)
    bad = PairSet(c, [(1, 1), (3, 4)])
    assert not is_independent(c, bad)
    with pytest.raises(CrownDomainError):
        blocking_pairs(c, CONTRACTION, 1, bad)
    with pytest.raises(CrownDomainError):
        transform(c, "DFCL", 1, bad)
    with pytest.raises(CrownDomainError):
        transform(c, "NOPE", 1, PairSet(c, [(1, 1)]))
    with pytest.raises(CrownDomainError):
        blocking_pairs(c, "sideways", 1, PairSet(c, [(1, 1)]))


def test_reflection_swaps_contraction_and_expansion():
    rng = seeded(23)
    for (n, k) in [(4, 2), (3, 3)]:
        c = make_crown(n, k)
        for _ in range(20):
            S = random_independent_set(c, rng)
            mirrored = phi_set(c, S)
            for i in range(1, c.circle + 1):
                con = blocking_pairs(c, CONTRACTION, i, S)
                exp = blocking_pairs(c, EXPANSION, c.norm(-i), mirrored)
                assert phi_set(c, con.first_set).members() == exp.first_set.members()
                assert phi_set(c, con.last_set).members() == exp.last_set.members()


def test_gaps_and_spread_of_smallest_cycle():
    c = make_crown(3, 3)
    C = sac3(c)
    gaps = cycle_gaps(c, C)
    assert sorted(gaps) == [2, 2, 3]  # (2, 2, n)
    rep = spread(c, C)
    assert rep.gaps == gaps
    assert rep.spread == c.n - 4
    mirror = AltCycle(c, tuple(phi_pair(c, p) for p in C.pairs))
    with pytest.raises(CrownDomainError):
        cycle_gaps(c, mirror)  # gaps need the disjoint arrangement


def test_fan_members_are_contained_in_the_cycle_pair():
    c, S, C = downset_with_cycle(4, 3)
    f = fan(c, C, 1, "forward")
    assert f.members() == {CritPair(1, 1), CritPair(1, 2), CritPair(1, 3)}
    b = fan(c, C, 1, "backward")
    assert b.members() == {CritPair(1, 3), CritPair(2, 3), CritPair(3, 3)}
    assert fan(c, C, 2, "forward").members() == {CritPair(4, 4)}
    with pytest.raises(CrownDomainError):
        fan(c, C, 4, "forward")
    with pytest.raises(CrownDomainError):
        fan(c, C, 1, "sideways")


def test_saturate_fans_on_extremal_sets_is_a_fixed_point():
    for (n, k) in [(3, 3), (4, 3), (5, 4)]:
        c, S, C = downset_with_cycle(n, k)
        for wants in (("forward",) * 3, ("backward",) * 3, ("forward", "backward", "forward")):
            out, steps = saturate_fans(c, S, C, wants)
            assert steps == ()
            assert out.members() == S.members()
            for alpha in (1, 2, 3):
                assert fan(c, C, alpha, wants[alpha - 1]).issubset(out)


def test_saturate_fans_accepts_dict_requests():
    c, S, C = downset_with_cycle(4, 3)
    out, steps = saturate_fans(c, S, C, {1: "f", 2: "b", 3: "f"})
    assert steps == () and out.members() == S.members()


def test_saturate_fans_error_carries_trace():
    c, S, C = downset_with_cycle(4, 3)
    partial = S.difference([(1, 2)])  # fan pair gone, no blocking pair to rebuild it
    assert not is_reversible(c, partial)
    with pytest.raises(StepTraceError) as exc:
        saturate_fans(c, partial, C, ("forward",) * 3)
    assert exc.value.trace == ()


def test_saturate_fans_preconditions():
    c, S, C = downset_with_cycle(4, 3)
    T = canonical_set(c, (1, 2, 3, 4))
    with pytest.raises(CrownDomainError):
        saturate_fans(c, T, C, ("forward",) * 3)  # reversible input
    with pytest.raises(CrownDomainError):
        saturate_fans(c, S.difference([C.pairs[0]]), C, ("forward",) * 3)
    with pytest.raises(CrownDomainError):
        saturate_fans(c, S, C, ("forward", "backward"))
