"""Canonical reversible sets T(sigma) and h-contiguous sequences.

A sequence sigma = (x_1, ..., x_r) of distinct minimals is h-contiguous when
every prefix occupies a contiguous cyclic block of A.  For sigma of length
k+1 the canonical set T(sigma) contains every pair (x_1, b) in Inc(A,B) and,
inductively, (x_{i+1}, b) whenever x_{i+1} is incomparable to b and
(x_i, b) is in T.  T(sigma) has exactly (k+1)(k+2)/2 pairs and is a maximal
reversible set; there are (n+k) 2^k canonical sets in all, indexed by the
base x_1 and the leading/trailing pattern of the remaining k entries.

The module also recovers sigma from a maximal reversible set (deciding
canonicality), classifies each B(x, T) as an initial or terminal portion of
the incomparability row I(x), and builds the tight non-canonical maximal
reversible sets of size (k+1)(k+2)/2 - n(n-1)/2 + 1 that exist when n <= k.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from .crown_core import MIN_ROLE, Crown, CrownDomainError, Element, parse_element
from .critpairs import I_a, PairSet, inc_pairs, is_independent, projections
from .guards import check_value
from .reversibility import consistent_labeling

TRAILING = "T"
LEADING = "L"


def _as_indices(crown: Crown, seq: Iterable) -> tuple:
    out = []
    for x in seq:
        if isinstance(x, str):
            x = parse_element(x)
        if isinstance(x, Element):
            if x.role != MIN_ROLE:
                raise CrownDomainError(f"sequence entries must be minimals, got {x}")
            idx = x.index
        else:
            idx = int(x)
        if not 1 <= idx <= crown.circle:
            raise CrownDomainError(f"A-index {idx} out of range 1..{crown.circle}")
        out.append(idx)
    if len(set(out)) != len(out):
        raise CrownDomainError(f"sequence has duplicate indices: {out}")
    return tuple(out)


def _is_cyclic_block(m: int, idxs: set) -> bool:
    if len(idxs) in (0, m):
        return True
    boundary = sum(1 for i in idxs if i % m + 1 not in idxs)
    return boundary == 1


def is_h_contiguous(crown: Crown, seq: Iterable) -> bool:
    """True iff every prefix of the sequence is a contiguous cyclic block of A."""
    idxs = _as_indices(crown, seq)
    prefix: set = set()
    for i in idxs:
        prefix.add(i)
        if not _is_cyclic_block(crown.circle, prefix):
            return False
    return True


def canonical_set(crown: Crown, sigma: Iterable) -> PairSet:
    """T(sigma) for an h-contiguous sigma of length k+1; size (k+1)(k+2)/2."""
    idxs = _as_indices(crown, sigma)
    if len(idxs) != crown.k + 1:
        raise CrownDomainError(
            f"sigma must have length k+1 = {crown.k + 1}, got {len(idxs)}"
        )
    if not is_h_contiguous(crown, idxs):
        raise CrownDomainError(f"sigma {idxs} is not h-contiguous")
    pairs = []
    row = set(I_a(crown, idxs[0]))
    pairs.extend((idxs[0], b) for b in row)
    for x in idxs[1:]:
        row = row & set(I_a(crown, x))
        pairs.extend((x, b) for b in row)
    T = PairSet(crown, pairs)
    want = (crown.k + 1) * (crown.k + 2) // 2
    if len(T) != want:
        raise RuntimeError(f"internal error: |T(sigma)| = {len(T)}, expected {want}")
    return T


def sigma_encode(crown: Crown, sigma: Iterable) -> tuple[int, str]:
    """(base, pattern): pattern[i] says whether x_{i+2} extends the trailing end."""
    idxs = _as_indices(crown, sigma)
    if not is_h_contiguous(crown, idxs):
        raise CrownDomainError(f"sigma {idxs} is not h-contiguous")
    lead = trail = idxs[0]
    pattern = []
    for x in idxs[1:]:
        if x == crown.norm(trail + 1):
            pattern.append(TRAILING)
            trail = x
        elif x == crown.norm(lead - 1):
            pattern.append(LEADING)
            lead = x
        else:
            raise RuntimeError(f"internal error: {x} extends neither end of [{lead},{trail}]")
    return idxs[0], "".join(pattern)


def sigma_decode(crown: Crown, base: int, pattern: str) -> tuple:
    """Rebuild sigma from its base index and leading/trailing pattern."""
    if not 1 <= base <= crown.circle:
        raise CrownDomainError(f"base {base} out of range 1..{crown.circle}")
    if any(c not in (TRAILING, LEADING) for c in pattern):
        raise CrownDomainError(f"pattern must use only '{TRAILING}'/'{LEADING}': {pattern!r}")
    idxs = [base]
    lead = trail = base
    for c in pattern:
        if c == TRAILING:
            trail = crown.norm(trail + 1)
            idxs.append(trail)
        else:
            lead = crown.norm(lead - 1)
            idxs.append(lead)
    if len(set(idxs)) != len(idxs):
        raise CrownDomainError(f"pattern wraps the whole circle: base={base} pattern={pattern}")
    return tuple(idxs)


def sigma_to_json(crown: Crown, sigma: Iterable) -> dict:
    base, pattern = sigma_encode(crown, sigma)
    return {"base": base, "pattern": pattern}


def sigma_from_json(crown: Crown, obj) -> tuple:
    """Accepts {"base":..,"pattern":".."} or an explicit index list."""
    if isinstance(obj, dict):
        return sigma_decode(crown, int(obj["base"]), str(obj["pattern"]))
    return _as_indices(crown, obj)


def enumerate_canonical(crown: Crown) -> Iterator[tuple[tuple, PairSet]]:
    """All (sigma, T(sigma)), base-major, pattern as a binary counter (bit i = x_{i+2} trailing)."""
    check_value("canonical_k", crown.k, "k")
    for base in range(1, crown.circle + 1):
        for bits in range(1 << crown.k):
            pattern = "".join(
                TRAILING if (bits >> i) & 1 else LEADING for i in range(crown.k)
            )
            sigma = sigma_decode(crown, base, pattern)
            yield sigma, canonical_set(crown, sigma)


def recover_sigma(crown: Crown, R: PairSet) -> Optional[tuple]:
    """The unique sigma with T(sigma) = R, or None when R is not canonical.

    R must be maximal reversible.  Canonical sets have B-set sizes exactly
    (k+1, k, ..., 1) along the consistent labeling, and the labeling is then
    the only candidate sigma.
    """
    labeling = consistent_labeling(crown, R)  # also enforces the precondition
    proj = projections(crown, R)
    sizes = tuple(len(proj.b_of[i]) for i in labeling)
    if sizes != tuple(range(crown.k + 1, 0, -1)):
        return None
    if not is_h_contiguous(crown, labeling):
        return None
    if canonical_set(crown, labeling) != R:
        return None
    return labeling


class PortionInfo(NamedTuple):
    kind: str  # "initial" or "terminal"
    length: int


def portion_info(crown: Crown, T: PairSet, x) -> PortionInfo:
    """Classify B(x,T) as an initial or terminal portion of the row I(x).

    The kind is computed from the sets themselves (a full row counts as
    initial); the length always equals k+2-i for x at position i of sigma.
    """
    sigma = recover_sigma(crown, T)
    if sigma is None:
        raise CrownDomainError("portion_info needs a canonical reversible set")
    idx = x.index if hasattr(x, "index") else int(x)
    if idx not in sigma:
        raise CrownDomainError(f"a{idx} is not in A(T)")
    proj = projections(crown, T)
    row = I_a(crown, idx)
    b_set = proj.b_of[idx]
    length = len(b_set)
    i = sigma.index(idx) + 1
    if length != crown.k + 2 - i:
        raise RuntimeError(f"internal error: |B(a{idx},T)| = {length} != k+2-{i}")
    if set(row[:length]) == set(b_set):
        return PortionInfo("initial", length)
    if set(row[-length:]) == set(b_set):
        return PortionInfo("terminal", length)
    raise RuntimeError(f"internal error: B(a{idx},T) is neither portion of I(a{idx})")


def noncanonical_extremal(crown: Crown, i: int = 1) -> PairSet:
    """The tight non-canonical maximal reversible set anchored at position i.

    Defined for 3 <= n <= k and 1 <= i <= k+1-n: start from T((a_1,...,a_{k+1})),
    drop the n(n-1)/2 pairs lying strictly inside the arc (u_i, u_{i+n}), and
    add the size-(k+1) pair (a_{i+n}, b_i).  The result has size
    (k+1)(k+2)/2 - n(n-1)/2 + 1.
    """
    n, k, m = crown.n, crown.k, crown.circle
    if n > k:
        raise CrownDomainError(f"construction needs n <= k, got (n,k)=({n},{k})")
    if not 1 <= i <= k + 1 - n:
        raise CrownDomainError(f"anchor i must satisfy 1 <= i <= k+1-n = {k + 1 - n}, got {i}")
    T = canonical_set(crown, tuple(range(1, k + 2)))
    keep = []
    for p in T:
        da = (p.a_index - i) % m
        db = (p.b_index - i) % m
        if 0 < da <= db < n:
            continue
        keep.append(p)
    R = PairSet(crown, keep).union([(i + n, i)])
    want = (k + 1) * (k + 2) // 2 - n * (n - 1) // 2 + 1
    if len(R) != want:
        raise RuntimeError(f"internal error: built size {len(R)}, expected {want}")
    return R


def is_maximal_independent(crown: Crown, S: PairSet) -> bool:
    """Maximal independence against the full pair universe."""
    if not is_independent(crown, S):
        return False
    from .critpairs import adjacent

    members = set(S.pairs)
    for q in inc_pairs(crown):
        if q in members:
            continue
        if all(not adjacent(crown, q, p) for p in members):
            return False
    return True
