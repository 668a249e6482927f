"""Crown posets S_n^k: elements, order relation, and circle geometry.

The crown S_n^k (integers n >= 3, k >= 0) is the height-2 poset on minimal
elements A = {a_1, ..., a_{n+k}} and maximal elements B = {b_1, ..., b_{n+k}}
where a_i is incomparable to b_j exactly when (j - i) mod (n+k) lies in
{0, 1, ..., k}, and a_i < b_j otherwise.  A and B are antichains.

Indices are 1-based and cyclic.  Both a_i and b_i sit at position u_i of a
circle of n+k points, which carries the geometry used everywhere else:
the ternary clockwise-betweenness relation, the size of an element pair
(length of the clockwise arc from one to the other, endpoints included),
and the containment/overlap/disjointness classification of critical pairs.

Two automorphism families act on the crown: the rotations tau_j
(a_i -> a_{i+j}, b_i -> b_{i+j}) and the reflection-like involution phi
(a_i -> a_{-i}, b_j -> b_{k-j}), which maps a pair of size s to one of
size k+2-s and reverses containment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

MIN_ROLE = "a"
MAX_ROLE = "b"

INCOMPARABLE = "incomparable"
A_BELOW_B = "a_below_b"


class CrownDomainError(ValueError):
    """A parameter or value lies outside the defined domain."""


class ResourceGuardError(RuntimeError):
    """An instance exceeds a named resource guard; see crownlab.solvers.GUARDS."""


class Element(NamedTuple):
    role: str  # MIN_ROLE for a_i, MAX_ROLE for b_j
    index: int

    def __str__(self) -> str:
        return f"{self.role}{self.index}"


_ELEMENT_RE = re.compile(r"^([ab])(\d+)$")


@dataclass(frozen=True)
class Crown:
    """Parameters (n, k) of one crown S_n^k; the circle has n+k positions."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise CrownDomainError(f"n and k must be integers, got ({self.n!r}, {self.k!r})")
        if self.n < 3:
            raise CrownDomainError(f"crown requires n >= 3, got n={self.n}")
        if self.k < 0:
            raise CrownDomainError(f"crown requires k >= 0, got k={self.k}")

    @property
    def circle(self) -> int:
        return self.n + self.k

    @property
    def ground_size(self) -> int:
        return 2 * (self.n + self.k)

    def norm(self, i: int) -> int:
        """Reduce an index into the canonical range [1, n+k]."""
        return (i - 1) % self.circle + 1

    def a(self, i: int) -> Element:
        return Element(MIN_ROLE, self.norm(i))

    def b(self, j: int) -> Element:
        return Element(MAX_ROLE, self.norm(j))

    def elements(self) -> list[Element]:
        m = self.circle
        return [Element(MIN_ROLE, i) for i in range(1, m + 1)] + [
            Element(MAX_ROLE, j) for j in range(1, m + 1)
        ]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "Crown":
        return cls(int(obj["n"]), int(obj["k"]))


def make_crown(n: int, k: int) -> Crown:
    return Crown(n, k)


def element_to_str(e: Element) -> str:
    return str(e)


def parse_element(s: str) -> Element:
    m = _ELEMENT_RE.match(s.strip())
    if m is None:
        raise CrownDomainError(f"cannot parse element {s!r}; expected like 'a7' or 'b1'")
    return Element(m.group(1), int(m.group(2)))


def relation(crown: Crown, a: Element, b: Element) -> str:
    """Relation between a minimal a and a maximal b: INCOMPARABLE or A_BELOW_B."""
    if a.role != MIN_ROLE or b.role != MAX_ROLE:
        raise CrownDomainError(
            f"relation() needs a minimal then a maximal, got {a} and {b}"
        )
    if (crown.norm(b.index) - crown.norm(a.index)) % crown.circle <= crown.k:
        return INCOMPARABLE
    return A_BELOW_B


def leq(crown: Crown, v: Element, w: Element) -> bool:
    """True iff v <= w in S_n^k.  Same-role elements are comparable only to themselves."""
    if v == w:
        return True
    if v.role == MIN_ROLE and w.role == MAX_ROLE:
        return relation(crown, v, w) == A_BELOW_B
    return False


def incomparable(crown: Crown, a: Element, b: Element) -> bool:
    return relation(crown, a, b) == INCOMPARABLE


def position(e: Element) -> int:
    """Circle position u_i of an element; a_i and b_i share position i."""
    return e.index


def _pos(crown: Crown, v: "Element | int") -> int:
    if isinstance(v, Element):
        return crown.norm(v.index)
    return crown.norm(v)


def cyclic_between(crown: Crown, first: "Element | int", second: "Element | int",
                   third: "Element | int") -> bool:
    """True iff walking clockwise from `first` meets `second` strictly before `third`.

    Arguments may be elements or raw circle positions; all three positions
    must be distinct.
    """
    p1, p2, p3 = _pos(crown, first), _pos(crown, second), _pos(crown, third)
    if len({p1, p2, p3}) != 3:
        raise CrownDomainError(f"cyclic_between needs distinct positions, got {p1},{p2},{p3}")
    m = crown.circle
    return (p2 - p1) % m < (p3 - p1) % m


def pair_size(crown: Crown, v1: Element, v2: Element) -> int:
    """Clockwise arc length from v1 to v2, both endpoints counted; in [1, n+k]."""
    return (_pos(crown, v2) - _pos(crown, v1)) % crown.circle + 1


def arc_positions(crown: Crown, v1: "Element | int", v2: "Element | int") -> list[int]:
    """Positions on the clockwise arc from v1 to v2 inclusive."""
    p1, p2 = _pos(crown, v1), _pos(crown, v2)
    m = crown.circle
    return [(p1 - 1 + t) % m + 1 for t in range((p2 - p1) % m + 1)]


EQUAL = "equal"
P_CONTAINED_IN_Q = "p_contained_in_q"
Q_CONTAINED_IN_P = "q_contained_in_p"
OVERLAP = "overlap"
DISJOINT = "disjoint"


def _check_critical(crown: Crown, p: tuple) -> tuple[int, int]:
    ai, bj = crown.norm(p[0]), crown.norm(p[1])
    if (bj - ai) % crown.circle > crown.k:
        raise CrownDomainError(f"({'a%d' % ai},{'b%d' % bj}) is not a critical pair of S_{crown.n}^{crown.k}")
    return ai, bj


def pair_relation(crown: Crown, p: tuple, q: tuple) -> str:
    """Classify two critical pairs (a-index, b-index) by their circle arcs.

    (a,b) is contained in (x,y) when x <= a <= b <= y along the clockwise
    walk from x; pairs overlap when their arcs share a circle point without
    containment; otherwise they are disjoint.
    """
    pa, pb = _check_critical(crown, p)
    qa, qb = _check_critical(crown, q)
    if (pa, pb) == (qa, qb):
        return EQUAL
    m = crown.circle

    def contained(ia: int, ib: int, ja: int, jb: int) -> bool:
        # arc [ia, ib] inside arc [ja, jb]
        da = (ia - ja) % m
        db = (ib - ja) % m
        return da <= db <= (jb - ja) % m

    if contained(pa, pb, qa, qb):
        return P_CONTAINED_IN_Q
    if contained(qa, qb, pa, pb):
        return Q_CONTAINED_IN_P
    if set(arc_positions(crown, pa, pb)) & set(arc_positions(crown, qa, qb)):
        return OVERLAP
    return DISJOINT


def tau(crown: Crown, j: int, e: Element) -> Element:
    """Rotation automorphism: adds j to the index, preserving the role."""
    return Element(e.role, crown.norm(e.index + j))


def phi(crown: Crown, e: Element) -> Element:
    """Involution automorphism: a_i -> a_{-i}, b_j -> b_{k-j}."""
    if e.role == MIN_ROLE:
        return Element(MIN_ROLE, crown.norm(-e.index))
    return Element(MAX_ROLE, crown.norm(crown.k - e.index))


def tau_pair(crown: Crown, j: int, p: tuple) -> tuple[int, int]:
    return (crown.norm(p[0] + j), crown.norm(p[1] + j))


def phi_pair(crown: Crown, p: tuple) -> tuple[int, int]:
    """Pointwise phi on a critical pair; the image is again a critical pair."""
    return (crown.norm(-p[0]), crown.norm(crown.k - p[1]))


def automorphism(crown: Crown, kind: str, e: Element, j: int = 0) -> Element:
    """Apply a named automorphism to one element: kind 'tau' (with shift j) or 'phi'."""
    if kind == "tau":
        return tau(crown, j, e)
    if kind == "phi":
        return phi(crown, e)
    raise CrownDomainError(f"unknown automorphism kind {kind!r}")


def elements_from_strs(names: Iterable[str]) -> list[Element]:
    return [parse_element(s) for s in names]
