"""Critical pairs of a crown, the graph G_n^k, and projection sets.

A critical pair of S_n^k is an incomparable pair (a_i, b_j); there are
exactly (n+k)(k+1) of them, written Inc(A,B).  The graph G_n^k has the
critical pairs as vertices, with an edge between (a_i, b_j) and (a_l, b_m)
exactly when a_i < b_m and a_l < b_j (the two pairs form a size-2
alternating cycle, so no linear extension can reverse both).

PairSet is the working currency: an immutable set of critical pairs over a
fixed crown with deterministic (lexicographic) iteration order.  Projection
helpers give A(S), B(S), B(a,S), A(b,S) and the incomparability rows I(a),
I(b).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .crown_core import (
    Crown,
    CrownDomainError,
    Element,
    INCOMPARABLE,
    MAX_ROLE,
    MIN_ROLE,
    phi_pair,
    relation,
    tau_pair,
)


class CritPair(NamedTuple):
    a_index: int
    b_index: int

    def __str__(self) -> str:
        return f"(a{self.a_index},b{self.b_index})"


def as_pair(crown: Crown, p: tuple) -> CritPair:
    """Normalize and validate a pair of indices as a critical pair."""
    ai, bj = crown.norm(int(p[0])), crown.norm(int(p[1]))
    if (bj - ai) % crown.circle > crown.k:
        raise CrownDomainError(
            f"(a{ai},b{bj}) is not a critical pair of S_{crown.n}^{crown.k}"
        )
    return CritPair(ai, bj)


def pair_elements(crown: Crown, p: CritPair) -> tuple[Element, Element]:
    return crown.a(p.a_index), crown.b(p.b_index)


class PairSet:
    """Immutable set of critical pairs over one crown; iterates lexicographically."""

    __slots__ = ("crown", "_members", "_sorted")

    def __init__(self, crown: Crown, pairs: Iterable[tuple] = ()):
        self.crown = crown
        self._members = frozenset(as_pair(crown, p) for p in pairs)
        self._sorted = tuple(sorted(self._members))

    @property
    def pairs(self) -> tuple[CritPair, ...]:
        return self._sorted

    def __iter__(self) -> Iterator[CritPair]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, p: object) -> bool:
        return p in self._members

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PairSet)
            and self.crown == other.crown
            and self._members == other._members
        )

    def __hash__(self) -> int:
        return hash((self.crown, self._members))

    def __repr__(self) -> str:
        inner = ",".join(str(p) for p in self._sorted)
        return f"PairSet(S_{self.crown.n}^{self.crown.k}, {{{inner}}})"

    def members(self) -> frozenset:
        return self._members

    def union(self, other: Iterable[tuple]) -> "PairSet":
        return PairSet(self.crown, list(self._members) + list(other))

    def difference(self, other: Iterable[tuple]) -> "PairSet":
        drop = {as_pair(self.crown, p) for p in other}
        return PairSet(self.crown, (p for p in self._members if p not in drop))

    def issubset(self, other: "PairSet") -> bool:
        return self._members <= other._members

    def to_json(self) -> dict:
        return {
            "n": self.crown.n,
            "k": self.crown.k,
            "pairs": [[p.a_index, p.b_index] for p in self._sorted],
        }

    @classmethod
    def from_json(cls, obj: dict, crown: "Crown | None" = None) -> "PairSet":
        found = Crown(int(obj["n"]), int(obj["k"]))
        if crown is not None and crown != found:
            raise CrownDomainError(
                f"pair-set file is for S_{found.n}^{found.k}, expected S_{crown.n}^{crown.k}"
            )
        return cls(found, [tuple(p) for p in obj["pairs"]])


@lru_cache(maxsize=None)
def inc_pairs(crown: Crown) -> tuple[CritPair, ...]:
    """All critical pairs of the crown in lexicographic order."""
    m = crown.circle
    out = []
    for i in range(1, m + 1):
        for t in range(crown.k + 1):
            out.append(CritPair(i, (i - 1 + t) % m + 1))
    return tuple(sorted(out))


def enumerate_inc(crown: Crown) -> PairSet:
    """The full set Inc(A,B); its size is (n+k)(k+1)."""
    return PairSet(crown, inc_pairs(crown))


def I_a(crown: Crown, i: int) -> tuple[int, ...]:
    """Indices of the k+1 maximals incomparable to a_i: b_i, ..., b_{i+k}."""
    i = crown.norm(i)
    return tuple((i - 1 + t) % crown.circle + 1 for t in range(crown.k + 1))


def I_b(crown: Crown, j: int) -> tuple[int, ...]:
    """Indices of the k+1 minimals incomparable to b_j: a_{j-k}, ..., a_j."""
    j = crown.norm(j)
    return tuple((j - 1 - crown.k + t) % crown.circle + 1 for t in range(crown.k + 1))


def adjacent(crown: Crown, p: tuple, q: tuple) -> bool:
    """Edge test in G_n^k: p's minimal below q's maximal and vice versa."""
    p = as_pair(crown, p)
    q = as_pair(crown, q)
    if p == q:
        raise CrownDomainError(f"adjacency is irreflexive; got {p} twice")
    m = crown.circle
    k = crown.k
    return (q.b_index - p.a_index) % m > k and (p.b_index - q.a_index) % m > k


@dataclass(frozen=True)
class Projections:
    """A(S), B(S) supports and the per-element sections B(a,S), A(b,S)."""

    a_support: tuple[int, ...]
    b_support: tuple[int, ...]
    b_of: dict  # a-index -> frozenset of b-indices with (a,b) in S
    a_of: dict  # b-index -> frozenset of a-indices with (a,b) in S


def projections(crown: Crown, S: PairSet) -> Projections:
    b_of: dict[int, set] = {i: set() for i in range(1, crown.circle + 1)}
    a_of: dict[int, set] = {j: set() for j in range(1, crown.circle + 1)}
    for p in S:
        b_of[p.a_index].add(p.b_index)
        a_of[p.b_index].add(p.a_index)
    return Projections(
        a_support=tuple(i for i in sorted(b_of) if b_of[i]),
        b_support=tuple(j for j in sorted(a_of) if a_of[j]),
        b_of={i: frozenset(v) for i, v in b_of.items()},
        a_of={j: frozenset(v) for j, v in a_of.items()},
    )


def is_independent(crown: Crown, S: PairSet) -> bool:
    """True iff no two members of S are adjacent in G_n^k."""
    ps = S.pairs
    m = crown.circle
    k = crown.k
    for idx, p in enumerate(ps):
        for q in ps[idx + 1:]:
            if (q.b_index - p.a_index) % m > k and (p.b_index - q.a_index) % m > k:
                return False
    return True


class CritGraph:
    """G_n^k with lexicographic vertex numbering and bitmask adjacency rows."""

    def __init__(self, crown: Crown):
        self.crown = crown
        self.vertices = inc_pairs(crown)
        self.index = {p: i for i, p in enumerate(self.vertices)}
        m = crown.circle
        k = crown.k
        n_v = len(self.vertices)
        adj = [0] * n_v
        for i, p in enumerate(self.vertices):
            for j in range(i + 1, n_v):
                q = self.vertices[j]
                if (q.b_index - p.a_index) % m > k and (p.b_index - q.a_index) % m > k:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.adj = adj
        self.edge_count = sum(bin(x).count("1") for x in adj) // 2

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, p: tuple) -> list[CritPair]:
        i = self.index[as_pair(self.crown, p)]
        row = self.adj[i]
        out = []
        j = 0
        while row:
            if row & 1:
                out.append(self.vertices[j])
            row >>= 1
            j += 1
        return out

    def edges(self) -> Iterator[tuple[CritPair, CritPair]]:
        for i, p in enumerate(self.vertices):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (p, self.vertices[j])
                row >>= 1
                j += 1

    def to_dimacs(self) -> str:
        lines = [f"p edge {len(self.vertices)} {self.edge_count}"]
        for p, q in self.edges():
            lines.append(f"e {self.index[p] + 1} {self.index[q] + 1}")
        return "\n".join(lines) + "\n"

    def vertex_map(self) -> dict:
        """Sidecar map: DIMACS vertex number (1-based) -> [a_index, b_index]."""
        return {str(i + 1): [p.a_index, p.b_index] for i, p in enumerate(self.vertices)}


def build_graph(crown: Crown) -> CritGraph:
    return CritGraph(crown)


def tau_set(crown: Crown, j: int, S: PairSet) -> PairSet:
    return PairSet(crown, (tau_pair(crown, j, p) for p in S))


def phi_set(crown: Crown, S: PairSet) -> PairSet:
    return PairSet(crown, (phi_pair(crown, p) for p in S))
