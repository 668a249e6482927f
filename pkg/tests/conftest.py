"""Shared test helpers.

naive_reversible re-derives reversibility from first principles (a linear
extension reversing S exists iff the comparability-plus-reversal digraph on
the 2(n+k) elements is acyclic) so the digraph-on-pairs implementation can
be cross-checked against something that looks nothing like it.
"""

import random

from crownlab import PairSet, make_crown


def naive_reversible(crown, S):
    m = crown.circle
    succ = {("a", i): set() for i in range(1, m + 1)}
    succ.update({("b", j): set() for j in range(1, m + 1)})
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if (j - i) % m > crown.k:  # a_i < b_j
                succ[("a", i)].add(("b", j))
    for p in S.pairs:
        succ[("b", p.b_index)].add(("a", p.a_index))
    color = {}

    def cyclic(u):
        color[u] = 1
        for v in succ[u]:
            c = color.get(v, 0)
            if c == 1 or (c == 0 and cyclic(v)):
                return True
        color[u] = 2
        return False

    return not any(color.get(u, 0) == 0 and cyclic(u) for u in list(succ))


def random_pair_subset(crown, rng, max_size=None):
    """Uniformly random subset of the critical pairs (no independence bias)."""
    m, k = crown.circle, crown.k
    pool = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if (j - i) % m <= k]
    cap = max_size or len(pool)
    return PairSet(crown, rng.sample(pool, rng.randint(0, min(cap, len(pool)))))


def small_crowns(max_circle):
    for m in range(3, max_circle + 1):
        for n in range(3, m + 1):
            yield make_crown(n, m - n)


def seeded(seed=0):
    return random.Random(seed)
