"""Reversibility of critical-pair sets via alternating cycles.

A set S of critical pairs is reversible when one linear extension of the
crown puts y below x for every (x, y) in S.  S is reversible exactly when
it contains no alternating cycle: pairs (x_1,y_1),...,(x_m,y_m) with
x_a <= y_{a-1} cyclically.  Operationally, build the auxiliary digraph on
S with an arc q -> p when p's minimal is below q's maximal; S is
reversible iff that digraph is acyclic.  A certificate is produced either
way: a verified reversing linear extension, or a strict alternating cycle
(one whose only cross relations are the cyclic ones), obtained from any
directed cycle by repeatedly shortcutting chords.

For maximal reversible sets the module also computes the block structure
(s, F, G) of a reversing extension - the scan of the extension into
alternating runs A_{s+1}, B_s, A_s, ..., A_1, B_0 satisfying the
Admissibility condition (x in A_i, y in B_j, x < y implies j < i) and the
Maximality condition (x in A_{i+1}, y in B_i implies x < y) - and a
consistent labeling of A(R), ordering the minimals so that B-set
containment never points forward.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .crown_core import (
    Crown,
    CrownDomainError,
    Element,
    MAX_ROLE,
    MIN_ROLE,
    cyclic_between,
    element_to_str,
    leq,
    parse_element,
)
from .critpairs import CritPair, PairSet, as_pair, inc_pairs, is_independent, projections

DISJOINT_PROPERTY = "D3"
OVERLAP_PROPERTY = "O3"


@dataclass(frozen=True)
class AltCycle:
    """Ordered pairs (x_1,y_1),...,(x_m,y_m) with x_a <= y_{a-1} cyclically."""

    crown: Crown
    pairs: tuple

    def __post_init__(self) -> None:
        ps = tuple(as_pair(self.crown, p) for p in self.pairs)
        object.__setattr__(self, "pairs", ps)
        if len(ps) < 2:
            raise CrownDomainError(f"alternating cycle needs >= 2 pairs, got {len(ps)}")
        if len(set(ps)) != len(ps):
            raise CrownDomainError("alternating cycle pairs must be distinct")
        for alpha, p in enumerate(ps):
            q = ps[alpha - 1]
            if not leq(self.crown, self.crown.a(p.a_index), self.crown.b(q.b_index)):
                raise CrownDomainError(
                    f"not an alternating cycle: a{p.a_index} is not below b{q.b_index}"
                )

    def __len__(self) -> int:
        return len(self.pairs)

    def as_pairset(self) -> PairSet:
        return PairSet(self.crown, self.pairs)

    def to_json(self) -> dict:
        return {
            "n": self.crown.n,
            "k": self.crown.k,
            "pairs": [[p.a_index, p.b_index] for p in self.pairs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AltCycle":
        return cls(Crown(int(obj["n"]), int(obj["k"])), tuple(tuple(p) for p in obj["pairs"]))


@dataclass(frozen=True)
class LinearExtension:
    """Total order on all 2(n+k) elements extending the crown order (bottom first)."""

    crown: Crown
    listing: tuple

    def __post_init__(self) -> None:
        listing = tuple(self.listing)
        object.__setattr__(self, "listing", listing)
        expected = set(self.crown.elements())
        if set(listing) != expected or len(listing) != len(expected):
            raise CrownDomainError("listing must contain every crown element exactly once")
        pos = {e: t for t, e in enumerate(listing)}
        m = self.crown.circle
        for i in range(1, m + 1):
            a = self.crown.a(i)
            for j in range(1, m + 1):
                b = self.crown.b(j)
                if leq(self.crown, a, b) and a != b and pos[a] > pos[b]:
                    raise CrownDomainError(f"listing violates {a} < {b}")

    def position(self, e: Element) -> int:
        return self.listing.index(e)

    def reverses(self, S: PairSet) -> bool:
        """True iff every (x, y) in S has y before x in the listing."""
        pos = {e: t for t, e in enumerate(self.listing)}
        return all(
            pos[self.crown.b(p.b_index)] < pos[self.crown.a(p.a_index)] for p in S
        )

    def to_json(self) -> list:
        return [element_to_str(e) for e in self.listing]

    @classmethod
    def from_json(cls, crown: Crown, obj: Iterable[str]) -> "LinearExtension":
        return cls(crown, tuple(parse_element(s) for s in obj))


class Reversible(NamedTuple):
    extension: LinearExtension


class NonReversible(NamedTuple):
    cycle: AltCycle


def aux_arcs(crown: Crown, pairs: tuple) -> dict:
    """Auxiliary digraph on the given pairs: arcs[q] = successors p with x_p <= y_q."""
    m = crown.circle
    k = crown.k
    arcs = {q: [] for q in pairs}
    for q in pairs:
        for p in pairs:
            if p != q and (q.b_index - p.a_index) % m > k:
                arcs[q].append(p)
    return arcs


def _find_directed_cycle(arcs: dict) -> list:
    """Any directed cycle, as a vertex list in arc order; deterministic."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in arcs}
    stack: list = []

    def dfs(root):
        path = [root]
        iters = [iter(sorted(arcs[root]))]
        color[root] = GRAY
        while path:
            try:
                w = next(iters[-1])
            except StopIteration:
                color[path.pop()] = BLACK
                iters.pop()
                continue
            if color[w] == GRAY:
                return path[path.index(w):]
            if color[w] == WHITE:
                color[w] = GRAY
                path.append(w)
                iters.append(iter(sorted(arcs[w])))
        return None

    for v in sorted(arcs):
        if color[v] == WHITE:
            cyc = dfs(v)
            if cyc is not None:
                return cyc
    return None


def _shrink_to_strict(crown: Crown, cycle: list) -> list:
    """Shortcut chords x_a <= y_b (b != a-1) until the cycle is strict."""
    m_circ = crown.circle
    k = crown.k
    cyc = list(cycle)
    changed = True
    while changed:
        changed = False
        m = len(cyc)
        for alpha in range(m):
            for beta in range(m):
                if beta == (alpha - 1) % m:
                    continue
                if (cyc[beta].b_index - cyc[alpha].a_index) % m_circ > k:
                    cyc = [cyc[(alpha + t) % m] for t in range((beta - alpha) % m + 1)]
                    changed = True
                    break
            if changed:
                break
    return cyc


def reversibility_certificate(crown: Crown, S: PairSet) -> "Reversible | NonReversible":
    """Reversible(extension) or NonReversible(strict cycle); both self-verified."""
    pairs = S.pairs
    arcs = aux_arcs(crown, pairs)
    # Kahn's algorithm on the pair digraph decides acyclicity.
    indeg = {v: 0 for v in pairs}
    for q in pairs:
        for p in arcs[q]:
            indeg[p] += 1
    queue = [v for v in pairs if indeg[v] == 0]
    seen = 0
    indeg_work = dict(indeg)
    while queue:
        v = queue.pop()
        seen += 1
        for p in arcs[v]:
            indeg_work[p] -= 1
            if indeg_work[p] == 0:
                queue.append(p)
    if seen == len(pairs):
        ext = reversing_extension(crown, S)
        if not ext.reverses(S):
            raise RuntimeError("internal error: built extension fails to reverse S")
        return Reversible(ext)
    cyc = _find_directed_cycle(arcs)
    cyc = _shrink_to_strict(crown, cyc)
    cycle = AltCycle(crown, tuple(cyc))
    if not is_strict(crown, cycle):
        raise RuntimeError("internal error: extracted cycle is not strict")
    return NonReversible(cycle)


def is_reversible(crown: Crown, S: PairSet) -> bool:
    return isinstance(reversibility_certificate(crown, S), Reversible)


def reversing_extension(crown: Crown, S: PairSet) -> LinearExtension:
    """Deterministic reversing extension: Kahn on 'crown order plus y < x per pair',
    lexicographic tie-breaking (minimals a1,a2,... before maximals b1,b2,...)."""
    listing = _schedule(crown, S, prefer_max=False)
    if listing is None:
        raise CrownDomainError("set is not reversible; no reversing extension exists")
    return LinearExtension(crown, tuple(listing))


def _schedule(crown: Crown, S: PairSet, prefer_max: bool, defer: frozenset = frozenset()):
    """Topological order of the auxiliary element order.

    prefer_max picks a ready maximal over any ready minimal; defer postpones
    the given maximals until nothing else is ready.  Returns None on a cycle.
    """
    m = crown.circle
    below: dict[Element, set] = {e: set() for e in crown.elements()}
    for i in range(1, m + 1):
        a = crown.a(i)
        for j in range(1, m + 1):
            b = crown.b(j)
            if leq(crown, a, b):
                below[b].add(a)
    for p in S:
        below[crown.a(p.a_index)].add(crown.b(p.b_index))

    placed: set = set()
    out: list = []
    ready_a: list = []
    ready_b: list = []
    ready_deferred: list = []
    waiting = {e: set(req) for e, req in below.items()}
    dependents: dict[Element, list] = {e: [] for e in below}
    for e, req in below.items():
        for r in req:
            dependents[r].append(e)

    def push(e: Element) -> None:
        if e.role == MIN_ROLE:
            heapq.heappush(ready_a, e)
        elif e in defer:
            heapq.heappush(ready_deferred, e)
        else:
            heapq.heappush(ready_b, e)

    for e, req in waiting.items():
        if not req:
            push(e)
    while ready_a or ready_b or ready_deferred:
        if prefer_max and ready_b:
            e = heapq.heappop(ready_b)
        elif ready_a or ready_b:
            # lexicographic across both heaps: ('a', i) sorts before ('b', j)
            if ready_a and (not ready_b or ready_a[0] < ready_b[0]):
                e = heapq.heappop(ready_a)
            else:
                e = heapq.heappop(ready_b)
        else:
            e = heapq.heappop(ready_deferred)
        out.append(e)
        placed.add(e)
        for d in dependents[e]:
            waiting[d].discard(e)
            if not waiting[d] and d not in placed:
                push(d)
    if len(out) != 2 * m:
        return None
    return out


def is_strict(crown: Crown, C: AltCycle) -> bool:
    """Strictness: x_a <= y_b exactly when b = a-1, with all x's and y's distinct."""
    ps = C.pairs
    m = len(ps)
    if len({p.a_index for p in ps}) != m or len({p.b_index for p in ps}) != m:
        return False
    mc = crown.circle
    k = crown.k
    for alpha in range(m):
        for beta in range(m):
            below = (ps[beta].b_index - ps[alpha].a_index) % mc > k
            if below != (beta == (alpha - 1) % m):
                return False
    return True


def classify_sac3(crown: Crown, C: AltCycle) -> str:
    """DISJOINT_PROPERTY or OVERLAP_PROPERTY for a strict 3-cycle.

    The six endpoints of a strict 3-cycle occur around the circle either as
    x_1 <= y_1 < x_2 <= y_2 < x_3 <= y_3 (disjoint pairs) or as
    x_1 <= y_2 < x_3 <= y_1 < x_2 <= y_3 (each pair overlapping the next);
    the circular order of x_1, x_2, x_3 distinguishes the two.
    """
    if len(C) != 3:
        raise CrownDomainError(f"classification needs a 3-cycle, got size {len(C)}")
    if not is_strict(crown, C):
        raise CrownDomainError("classification needs a strict cycle")
    x1, x2, x3 = (p.a_index for p in C.pairs)
    if cyclic_between(crown, x1, x2, x3):
        return DISJOINT_PROPERTY
    return OVERLAP_PROPERTY


def addable_pair(crown: Crown, S: PairSet) -> Optional[CritPair]:
    """A critical pair whose addition keeps S reversible, or None if S is maximal."""
    pairs = set(S.pairs)
    for q in inc_pairs(crown):
        if q in pairs:
            continue
        if is_reversible(crown, S.union([q])):
            return q
    return None


def is_maximal_reversible(crown: Crown, S: PairSet) -> bool:
    return is_reversible(crown, S) and addable_pair(crown, S) is None


def ensure_maximal_reversible(crown: Crown, R: PairSet) -> None:
    cert = reversibility_certificate(crown, R)
    if isinstance(cert, NonReversible):
        raise CrownDomainError("input set is not reversible")
    missing = addable_pair(crown, R)
    if missing is not None:
        raise CrownDomainError(
            f"input set is not maximal reversible: pair {missing} can still be added"
        )


@dataclass(frozen=True)
class BlockStructure:
    """Blocks (s, F, G) read off a reversing extension of a maximal reversible set.

    a_blocks maps i in 1..s+1 to A_i, b_blocks maps j in 0..s to B_j, both as
    frozensets of indices.  The extension scans bottom-to-top as
    A_{s+1}, B_s, A_s, ..., A_1, B_0.
    """

    crown: Crown
    s: int
    a_blocks: dict
    b_blocks: dict
    extension: LinearExtension


def _verify_blocks(crown: Crown, a_blocks: dict, b_blocks: dict) -> None:
    s = len(b_blocks) - 1
    for i, ablk in a_blocks.items():
        for j, bblk in b_blocks.items():
            for ai in ablk:
                for bj in bblk:
                    a, b = crown.a(ai), crown.b(bj)
                    if leq(crown, a, b) and j >= i:
                        raise RuntimeError(
                            f"admissibility fails: a{ai} < b{bj} with blocks A_{i}, B_{j}"
                        )
    for i in range(0, s + 1):
        for ai in a_blocks.get(i + 1, ()):  # A_{i+1} against B_i
            for bj in b_blocks.get(i, ()):
                if not leq(crown, crown.a(ai), crown.b(bj)):
                    raise RuntimeError(
                        f"maximality fails: a{ai} in A_{i+1} not below b{bj} in B_{i}"
                    )


def block_structure(crown: Crown, R: PairSet) -> BlockStructure:
    """Scan a reversing extension of a maximal reversible set into its blocks."""
    ensure_maximal_reversible(crown, R)
    proj = projections(crown, R)
    if len(proj.a_support) != crown.k + 1 or len(proj.b_support) != crown.k + 1:
        raise RuntimeError(
            f"maximal reversible set with |A(R)|={len(proj.a_support)}, "
            f"|B(R)|={len(proj.b_support)}; expected k+1={crown.k + 1} for both"
        )
    unreversed_b = frozenset(
        crown.b(j) for j in range(1, crown.circle + 1) if j not in proj.b_support
    )
    listing = _schedule(crown, R, prefer_max=True, defer=unreversed_b)
    ext = LinearExtension(crown, tuple(listing))
    if not ext.reverses(R):
        raise RuntimeError("internal error: block-structure extension fails to reverse R")

    runs: list[tuple[str, list]] = []
    for e in listing:
        if runs and runs[-1][0] == e.role:
            runs[-1][1].append(e.index)
        else:
            runs.append((e.role, [e.index]))
    if runs[0][0] != MIN_ROLE or runs[-1][0] != MAX_ROLE or len(runs) % 2 != 0:
        raise RuntimeError(f"unexpected run shape in reversing extension: {runs}")
    s = len(runs) // 2 - 1
    a_runs = [frozenset(r[1]) for r in runs if r[0] == MIN_ROLE]
    b_runs = [frozenset(r[1]) for r in runs if r[0] == MAX_ROLE]
    a_blocks = {s + 1 - t: blk for t, blk in enumerate(a_runs)}
    b_blocks = {s - t: blk for t, blk in enumerate(b_runs)}
    _verify_blocks(crown, a_blocks, b_blocks)
    if len(a_blocks[s + 1]) != crown.n - 1 or len(b_blocks[0]) != crown.n - 1:
        raise RuntimeError("outer blocks do not have the expected size n-1")
    return BlockStructure(crown, s, a_blocks, b_blocks, ext)


def consistent_labeling(crown: Crown, R: PairSet) -> tuple:
    """Order A(R) as x_1..x_{k+1} so B-set containment never points forward.

    Whenever B(x_beta, R) is properly contained in B(x_alpha, R), alpha < beta.
    Sorted by decreasing |B(x, R)|, ties by ascending index; the result always
    satisfies |B(x_i, R)| <= k+2-i.
    """
    ensure_maximal_reversible(crown, R)
    proj = projections(crown, R)
    order = sorted(proj.a_support, key=lambda i: (-len(proj.b_of[i]), i))
    for alpha in range(len(order)):
        for beta in range(alpha + 1, len(order)):
            ba, bb = proj.b_of[order[alpha]], proj.b_of[order[beta]]
            if ba < bb:
                raise RuntimeError("no consistent labeling: containment points forward")
    for i, ai in enumerate(order, start=1):
        if len(proj.b_of[ai]) > crown.k + 2 - i:
            raise RuntimeError(
                f"labeling bound violated: |B(x_{i})| = {len(proj.b_of[ai])} > {crown.k + 2 - i}"
            )
    return tuple(order)
