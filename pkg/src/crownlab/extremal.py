"""Named extremal sets: strict 3-cycles, matching cycles, and their down sets.

Two strict alternating 3-cycles exist whenever n <= 2k:

    n <= k:      {(a_1, b_1), (a_2, b_{k+1}), (a_{k+2}, b_{k+2})}
    k < n <= 2k: {(a_1, b_{2k+1-n}), (a_{k+1}, b_{k+1}), (a_{2k+1}, b_{2k+1})}

A cycle C = {(x_1,y_1), ..., (x_{2t+1}, y_{2t+1})} listed in circular order
satisfies the Matching Conditions when consecutive pairs are spatially
disjoint (x_a <= y_a < x_{a+1} <= y_{a+1} around the circle) and each
antipodal pair (x_a, y_{a+t}) has size exactly k+1.  Such cycles exist in
the range k < n <= 2k iff t(n-k) <= k, their sizes always sum to
k+2t+1-t(n-k), and their down sets D(C) are precisely the maximal
independent non-reversible sets whose 3-cycles have the disjoint property;
minr_d3_certify recovers the generating cycle from such a set.

inr_extremal builds the maximum-size independent non-reversible set for
each range of n.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .crown_core import (
    Crown,
    CrownDomainError,
    P_CONTAINED_IN_Q,
    pair_relation,
    pair_size,
)
from .critpairs import PairSet, as_pair, is_independent
from .canonical import is_maximal_independent
from .reversibility import AltCycle, is_reversible, is_strict


def sac3(crown: Crown) -> AltCycle:
    """The strict alternating 3-cycle for the applicable range of n."""
    n, k = crown.n, crown.k
    if n > 2 * k:
        raise CrownDomainError(
            f"S_{n}^{k} has no non-reversible independent set (n > 2k)"
        )
    if n <= k:
        pairs = ((1, 1), (2, k + 1), (k + 2, k + 2))
    else:
        pairs = ((1, 2 * k + 1 - n), (k + 1, k + 1), (2 * k + 1, 2 * k + 1))
    C = AltCycle(crown, tuple((crown.norm(a), crown.norm(b)) for a, b in pairs))
    assert is_strict(crown, C)
    assert is_independent(crown, C.as_pairset())
    return C


class MatchingCycleSpec(NamedTuple):
    t: int
    sizes: tuple

    def validate(self, crown: Crown) -> None:
        n, k = crown.n, crown.k
        if not k < n <= 2 * k:
            raise CrownDomainError(f"matching cycles need k < n <= 2k, got ({n},{k})")
        if self.t < 1:
            raise CrownDomainError("t must be positive")
        if self.t * (n - k) > k:
            raise CrownDomainError(
                f"no matching cycle with t={self.t}: t(n-k)={self.t * (n - k)} > k={k}"
            )
        if len(self.sizes) != 2 * self.t + 1:
            raise CrownDomainError(
                f"need 2t+1={2 * self.t + 1} sizes, got {len(self.sizes)}"
            )
        if any(not 1 <= s <= k + 1 for s in self.sizes):
            raise CrownDomainError("each size must lie in [1, k+1]")
        want = k + 2 * self.t + 1 - self.t * (n - k)
        if sum(self.sizes) != want:
            raise CrownDomainError(
                f"sizes sum to {sum(self.sizes)}, must be k+2t+1-t(n-k)={want}"
            )


def default_matching_spec(crown: Crown, t: int) -> MatchingCycleSpec:
    """A valid size vector for the given t: start at all ones and spread the
    k - t(n-k) leftover units round-robin."""
    n, k = crown.n, crown.k
    if not k < n <= 2 * k:
        raise CrownDomainError(f"matching cycles need k < n <= 2k, got ({n},{k})")
    if t < 1 or t * (n - k) > k:
        raise CrownDomainError(f"no matching cycle with t={t} in S_{n}^{k}")
    m = 2 * t + 1
    sizes = [1] * m
    left = k - t * (n - k)
    slot = 0
    while left > 0:
        if sizes[slot] < k + 1:
            sizes[slot] += 1
            left -= 1
        slot = (slot + 1) % m
    spec = MatchingCycleSpec(t, tuple(sizes))
    spec.validate(crown)
    return spec


def matching_cycle(crown: Crown, spec: MatchingCycleSpec) -> AltCycle:
    """Build the cycle with the given sizes, anchored at position 1.

    Stepping a -> a+t (mod 2t+1) from p_1 = 1, each new pair starts at
    p_prev + k + 1 - s_new, which makes every antipodal pair (x_a, y_{a+t})
    have size k+1; the walk closes because the steps sum to t(n+k).
    """
    spec.validate(crown)
    t, sizes = spec.t, spec.sizes
    m = 2 * t + 1
    pos = [0] * m  # 0-based slot -> circle position of x_{slot+1}
    pos[0] = 1
    slot = 0
    for _ in range(m - 1):
        nxt = (slot + t) % m
        pos[nxt] = crown.norm(pos[slot] + crown.k + 1 - sizes[nxt])
        slot = nxt
    assert crown.norm(pos[slot] + crown.k + 1 - sizes[0]) == pos[0]
    pairs = [
        (pos[a], crown.norm(pos[a] + sizes[a] - 1)) for a in range(m)
    ]
    pairs.sort(key=lambda p: p[0])
    C = AltCycle(crown, tuple(pairs))
    if not check_matching_conditions(crown, C):
        raise CrownDomainError(f"sizes {sizes} overlap on the circle for t={t}")
    return C


def check_matching_conditions(crown: Crown, C: AltCycle) -> bool:
    """True iff C, in circular order, satisfies both Matching Conditions."""
    m = len(C)
    if m % 2 == 0 or m < 3:
        raise CrownDomainError(f"matching cycles have odd size >= 3, got {m}")
    t = (m - 1) // 2
    pairs = sorted(C.pairs, key=lambda p: p.a_index)
    # spatial disjointness: within-pair steps plus the gaps walk the circle
    # exactly once, every gap being at least one step
    walk = 0
    for alpha in range(m):
        p = pairs[alpha]
        q = pairs[(alpha + 1) % m]
        s = pair_size(crown, crown.a(p.a_index), crown.b(p.b_index))
        gap = (q.a_index - p.b_index) % crown.circle
        if gap < 1:
            return False
        walk += (s - 1) + gap
    if walk != crown.circle:
        return False
    for alpha in range(m):
        p = pairs[alpha]
        q = pairs[(alpha + t) % m]
        if pair_size(crown, crown.a(p.a_index), crown.b(q.b_index)) != crown.k + 1:
            return False
    return True


def _down_closure(crown: Crown, tops) -> PairSet:
    """All critical pairs contained in one of the given pairs."""
    out = set()
    for top in tops:
        p = as_pair(crown, top)
        a, s = p.a_index, pair_size(crown, crown.a(p.a_index), crown.b(p.b_index))
        for i in range(s):
            for j in range(i, s):
                out.add((crown.norm(a + i), crown.norm(a + j)))
    return PairSet(crown, out)


def downset_of_cycle(crown: Crown, C: AltCycle) -> PairSet:
    """D(C): every pair contained in a cycle pair; size is sum of s(s+1)/2."""
    if not check_matching_conditions(crown, C):
        raise CrownDomainError("cycle does not satisfy the Matching Conditions")
    D = _down_closure(crown, C.pairs)
    total = 0
    for p in C.pairs:
        s = pair_size(crown, crown.a(p.a_index), crown.b(p.b_index))
        total += s * (s + 1) // 2
    assert len(D) == total
    return D


def max_pairs(crown: Crown, S: PairSet) -> tuple:
    """The members of S not properly contained in another member."""
    out = []
    for p in S:
        if not any(
            q != p and pair_relation(crown, p, q) == P_CONTAINED_IN_Q for q in S
        ):
            out.append(p)
    return tuple(out)


def minr_d3_certify(crown: Crown, S: PairSet) -> Optional[AltCycle]:
    """Recover the generating cycle of a disjoint-property maximal set.

    For k < n <= 2k, the maximal independent non-reversible sets whose
    strict 3-cycles all have disjoint pairs are exactly the down sets of
    Matching-Condition cycles.  Returns Max(S) as that cycle when S is one
    of these sets, and None otherwise.
    """
    n, k = crown.n, crown.k
    if not k < n <= 2 * k:
        raise CrownDomainError(f"certification needs k < n <= 2k, got ({n},{k})")
    if not is_independent(crown, S) or not is_maximal_independent(crown, S):
        return None
    if is_reversible(crown, S):
        return None
    tops = sorted(max_pairs(crown, S), key=lambda p: p.a_index)
    if len(tops) < 3 or len(tops) % 2 == 0:
        return None
    try:
        C = AltCycle(crown, tuple((p.a_index, p.b_index) for p in tops))
    except CrownDomainError:
        return None
    if not check_matching_conditions(crown, C):
        return None
    if _down_closure(crown, C.pairs) != S:
        return None
    return C


def inr_extremal(crown: Crown) -> PairSet:
    """A maximum-size independent non-reversible set.

    For n <= k this is the down-closure of (a_2,b_{k+1}), (a_1,b_{k+2-n}),
    (a_{k+2},b_{k+2}) and has (k+1)(k+2)/2 + 2 - n pairs; for k < n <= 2k
    it is the down-closure of the strict 3-cycle and has
    2 + (2k+2-n)(2k+1-n)/2 pairs.
    """
    n, k = crown.n, crown.k
    if n > 2 * k:
        raise CrownDomainError(
            f"S_{n}^{k} has no non-reversible independent set (n > 2k)"
        )
    if n <= k:
        tops = ((2, k + 1), (1, crown.norm(k + 2 - n)), (k + 2, k + 2))
        S = _down_closure(crown, tops)
        assert len(S) == (k + 1) * (k + 2) // 2 + 2 - n
    else:
        S = _down_closure(crown, sac3(crown).pairs)
        assert len(S) == 2 + (2 * k + 2 - n) * (2 * k + 1 - n) // 2
    assert is_independent(crown, S)
    assert not is_reversible(crown, S)
    assert is_maximal_independent(crown, S)
    return S
