"""Contraction/expansion blocking pairs and the four set transforms.

An ordered pair ((a,b),(x,y)) of critical pairs in an independent set S is
a contraction blocking pair at i when a=a_i, y=b_i and x<b in the crown,
and an expansion blocking pair at i when a=a_i, y=b_{i+k} and x<b.  FCBP
and LCBP collect the first and last members over all contraction blocking
pairs at i; FEBP and LEBP do the same for expansions.  One set is empty
iff the other is.

The transforms delete one side wholesale and add shifted copies built from
the other side:

    DFCL(i,S) = (S - FCBP(i,S)) + {(x, b_{i-1}) : (x, b_i) in LCBP(i,S)}
    DLCF(i,S) = (S - LCBP(i,S)) + {(a_{i+1}, b) : (a_i, b) in FCBP(i,S)}
    DFEL(i,S) = (S - FEBP(i,S)) + {(x, b_{i+k+1}) : (x, b_{i+k}) in LEBP(i,S)}
    DLEF(i,S) = (S - LEBP(i,S)) + {(a_{i-1}, b) : (a_i, b) in FEBP(i,S)}

Each output is independent again and |DFCL|+|DLCF| = |DFEL|+|DLEF| = 2|S|.

The second half of the module works with strict 3-cycles: forward and
backward fans, the three gap sizes and the spread, and saturate_fans, a
loop that grows missing fan pairs one contraction at a time.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .crown_core import (
    Crown,
    CrownDomainError,
    arc_positions,
    leq,
    pair_size,
)
from .critpairs import CritPair, PairSet, as_pair, is_independent
from .reversibility import (
    DISJOINT_PROPERTY,
    AltCycle,
    classify_sac3,
    is_reversible,
    is_strict,
)

CONTRACTION = "contraction"
EXPANSION = "expansion"
OPS = ("DFCL", "DLCF", "DFEL", "DLEF")

FORWARD = "forward"
BACKWARD = "backward"


class BlockingPairReport(NamedTuple):
    kind: str
    position: int
    first_set: PairSet
    last_set: PairSet


class TransformStep(NamedTuple):
    op: str
    position: int
    removed: tuple
    added: tuple

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "position": self.position,
            "removed": [[p.a_index, p.b_index] for p in self.removed],
            "added": [[p.a_index, p.b_index] for p in self.added],
        }


class StepTraceError(RuntimeError):
    """A fan-saturation step could not proceed; carries the trace so far."""

    def __init__(self, message: str, trace: tuple = ()):
        super().__init__(message)
        self.trace = tuple(trace)


def _require_independent(crown: Crown, S: PairSet) -> None:
    if not is_independent(crown, S):
        raise CrownDomainError("set is not independent")


def blocking_pairs(crown: Crown, kind: str, i: int, S: PairSet) -> BlockingPairReport:
    """FCBP/LCBP (kind='contraction') or FEBP/LEBP (kind='expansion') at i."""
    if kind not in (CONTRACTION, EXPANSION):
        raise CrownDomainError(f"unknown blocking-pair kind {kind!r}")
    _require_independent(crown, S)
    i = crown.norm(i)
    # the last pair of a blocking pair at i ends at b_i (contraction)
    # or at b_{i+k} (expansion); the first pair always starts at a_i
    last_b = i if kind == CONTRACTION else crown.norm(i + crown.k)
    firsts = [p for p in S if p.a_index == i]
    lasts = [p for p in S if p.b_index == last_b]
    first_set = PairSet(
        crown,
        (
            p
            for p in firsts
            if any(leq(crown, crown.a(q.a_index), crown.b(p.b_index)) for q in lasts)
        ),
    )
    last_set = PairSet(
        crown,
        (
            q
            for q in lasts
            if any(leq(crown, crown.a(q.a_index), crown.b(p.b_index)) for p in firsts)
        ),
    )
    assert (len(first_set) == 0) == (len(last_set) == 0)
    return BlockingPairReport(kind, i, first_set, last_set)


def _transform_parts(
    crown: Crown, op: str, i: int, S: PairSet
) -> tuple[PairSet, PairSet]:
    """(removed, added) for one transform application."""
    op = op.upper()
    if op not in OPS:
        raise CrownDomainError(f"unknown transform {op!r}; expected one of {OPS}")
    kind = CONTRACTION if op in ("DFCL", "DLCF") else EXPANSION
    report = blocking_pairs(crown, kind, i, S)
    i = report.position
    if op == "DFCL":
        removed = report.first_set
        added = [(p.a_index, crown.norm(i - 1)) for p in report.last_set]
    elif op == "DLCF":
        removed = report.last_set
        added = [(crown.norm(i + 1), p.b_index) for p in report.first_set]
    elif op == "DFEL":
        removed = report.first_set
        added = [(p.a_index, crown.norm(i + crown.k + 1)) for p in report.last_set]
    else:  # DLEF
        removed = report.last_set
        added = [(crown.norm(i - 1), p.b_index) for p in report.first_set]
    return removed, PairSet(crown, added)


def transform(crown: Crown, op: str, i: int, S: PairSet) -> PairSet:
    """Apply DFCL, DLCF, DFEL or DLEF at position i."""
    result, _ = transform_with_trace(crown, op, i, S)
    return result


def transform_with_trace(
    crown: Crown, op: str, i: int, S: PairSet
) -> tuple[PairSet, TransformStep]:
    removed, added = _transform_parts(crown, op, i, S)
    result = S.difference(removed).union(added)
    # shifted copies never coincide with surviving members, so sizes add up
    assert len(result) == len(S) - len(removed) + len(added)
    assert is_independent(crown, result)
    step = TransformStep(op.upper(), crown.norm(i), removed.pairs, added.pairs)
    return result, step


def steps_to_json(steps: Iterable[TransformStep]) -> list[dict]:
    return [s.to_json() for s in steps]


def _cycle3(crown: Crown, C: AltCycle) -> AltCycle:
    if len(C) != 3:
        raise CrownDomainError(f"need a 3-cycle, got size {len(C)}")
    if not is_strict(crown, C):
        raise CrownDomainError("need a strict cycle")
    return C


def _norm_direction(d: str) -> str:
    d = d.lower()
    if d in (FORWARD, "f"):
        return FORWARD
    if d in (BACKWARD, "b"):
        return BACKWARD
    raise CrownDomainError(f"unknown fan direction {d!r}")


def fan(crown: Crown, C: AltCycle, alpha: int, direction: str) -> PairSet:
    """Forward fan {(x_a, w): x_a <= w <= y_a} or backward fan {(z, y_a)}.

    Positions run clockwise along the arc of the cycle pair (x_a, y_a);
    every fan member is a critical pair because it is contained in that
    pair.  alpha is 1-based.
    """
    C = _cycle3(crown, C)
    if alpha not in (1, 2, 3):
        raise CrownDomainError(f"fan index must be 1, 2 or 3, got {alpha}")
    direction = _norm_direction(direction)
    p = C.pairs[alpha - 1]
    arc = arc_positions(crown, crown.a(p.a_index), crown.b(p.b_index))
    if direction == FORWARD:
        return PairSet(crown, ((p.a_index, w) for w in arc))
    return PairSet(crown, ((z, p.b_index) for z in arc))


class SpreadReport(NamedTuple):
    gaps: tuple
    spread: int


def cycle_gaps(crown: Crown, C: AltCycle) -> tuple:
    """Gap sizes (g_1, g_2, g_3); g_a spans the arc from y_a to x_{a+1}."""
    C = _cycle3(crown, C)
    if classify_sac3(crown, C) != DISJOINT_PROPERTY:
        raise CrownDomainError("gaps are defined for cycles with disjoint pairs")
    gaps = []
    for alpha in range(3):
        y = C.pairs[alpha]
        x = C.pairs[(alpha + 1) % 3]
        g = pair_size(crown, crown.b(y.b_index), crown.a(x.a_index))
        assert 2 <= g <= crown.n
        gaps.append(g)
    return tuple(gaps)


def spread(crown: Crown, C: AltCycle) -> SpreadReport:
    """Gap sizes plus max over a of g_a - g_{a+1} - g_{a+2}."""
    gaps = cycle_gaps(crown, C)
    value = max(gaps[a] - gaps[(a + 1) % 3] - gaps[(a + 2) % 3] for a in range(3))
    return SpreadReport(gaps, value)


def _present_span(crown: Crown, S: PairSet, p: CritPair, direction: str) -> int:
    """Index into the arc of p marking how much of the fan S already holds.

    Forward fans grow from y back toward x, so the span is the arc index of
    the first position of the longest all-present tail.  Backward fans grow
    from x toward y; the span is the arc index of the last position of the
    longest all-present prefix.
    """
    arc = arc_positions(crown, crown.a(p.a_index), crown.b(p.b_index))
    if direction == FORWARD:
        j = len(arc) - 1
        while j > 0 and CritPair(p.a_index, arc[j - 1]) in S:
            j -= 1
        return j
    j = 0
    while j < len(arc) - 1 and CritPair(arc[j + 1], p.b_index) in S:
        j += 1
    return j


def saturate_fans(
    crown: Crown, S: PairSet, C: AltCycle, f
) -> tuple[PairSet, tuple]:
    """Grow S until it holds the requested fan of C at each alpha.

    f maps each alpha in {1,2,3} to 'forward' or 'backward' (a dict or a
    3-sequence).  Each round locates the innermost missing fan pair, checks
    that the pair next to it sits in LCBP (forward) or FCBP (backward) at
    the boundary position m, and applies DFCL(m) or DLCF(m).  Raises
    StepTraceError, carrying the steps applied so far, when the needed
    blocking pair is absent, a step evicts a pair of C or of an already
    finished fan, or the loop stalls; success is only guaranteed when S has
    maximum size among independent sets.

    Returns the saturated set and the tuple of applied steps.
    """
    C = _cycle3(crown, C)
    _require_independent(crown, S)
    if not C.as_pairset().issubset(S):
        raise CrownDomainError("cycle is not contained in the set")
    if is_reversible(crown, S):
        raise CrownDomainError("set is reversible; fan saturation needs a cycle")
    if isinstance(f, dict):
        wants = {a: _norm_direction(f[a]) for a in (1, 2, 3)}
    else:
        seq = list(f)
        if len(seq) != 3:
            raise CrownDomainError("fan request must cover alpha = 1, 2, 3")
        wants = {a: _norm_direction(seq[a - 1]) for a in (1, 2, 3)}

    trace: list[TransformStep] = []
    current = S
    done: list[PairSet] = []
    budget = 3 * (crown.k + 2)
    for alpha in (1, 2, 3):
        direction = wants[alpha]
        goal = fan(crown, C, alpha, direction)
        p = C.pairs[alpha - 1]
        arc = arc_positions(crown, crown.a(p.a_index), crown.b(p.b_index))
        while not goal.issubset(current):
            if budget == 0:
                raise StepTraceError("fan saturation stalled", trace)
            budget -= 1
            j = _present_span(crown, current, p, direction)
            m = arc[j]
            if direction == FORWARD:
                # tail [u_m .. y] is present; (x, b_m) must be last in a
                # contraction blocking pair at m for DFCL to add (x, b_{m-1})
                report = blocking_pairs(crown, CONTRACTION, m, current)
                if CritPair(p.a_index, m) not in report.last_set:
                    raise StepTraceError(
                        f"no contraction blocking pair at {m} extends the "
                        f"forward {alpha}-fan",
                        trace,
                    )
                current, step = transform_with_trace(crown, "DFCL", m, current)
            else:
                report = blocking_pairs(crown, CONTRACTION, m, current)
                if CritPair(m, p.b_index) not in report.first_set:
                    raise StepTraceError(
                        f"no contraction blocking pair at {m} extends the "
                        f"backward {alpha}-fan",
                        trace,
                    )
                current, step = transform_with_trace(crown, "DLCF", m, current)
            trace.append(step)
            if not C.as_pairset().issubset(current):
                raise StepTraceError(
                    f"step {step.op}({step.position}) removed a cycle pair", trace
                )
            for earlier in done:
                if not earlier.issubset(current):
                    raise StepTraceError(
                        f"step {step.op}({step.position}) broke a finished fan",
                        trace,
                    )
        done.append(goal)
    return current, tuple(trace)
