"""The canonical family: counting it and reading one member in detail.

Canonical sets are the maximum reversible sets built from an anchor
sequence sigma of k+1 minimal indices that grow a contiguous arc one end
at a time.  There are exactly (n+k) * 2^k of them.  The second half of the
script dissects one concrete member of S_4^5.

    python demos/canonical_census.py
"""

from crownlab import (
    canonical_set,
    enumerate_canonical,
    is_maximal_independent,
    make_crown,
    recover_sigma,
    reversing_extension,
    sigma_encode,
)
from crownlab.canonical import portion_info


def census(n, k):
    c = make_crown(n, k)
    m = n + k
    count = 0
    for sigma, T in enumerate_canonical(c):
        count += 1
        assert len(T.pairs) == (k + 1) * (k + 2) // 2
        assert is_maximal_independent(c, T)
        assert recover_sigma(c, T) == tuple(sigma)
    print(f"  S_{n}^{k}: {count} canonical sets, formula (n+k)*2^k = {m * 2 ** k}")
    assert count == m * 2 ** k


def main():
    print("census over a few crowns")
    for (n, k) in [(3, 2), (4, 2), (3, 3), (5, 3)]:
        census(n, k)
    print()

    c = make_crown(4, 5)
    sigma = (8, 9, 7, 1, 6, 2)
    T = canonical_set(c, sigma)
    base, pattern = sigma_encode(c, sigma)
    print(f"S_4^5 with anchors {sigma}  (base {base}, growth pattern {pattern})")
    print(f"{len(T.pairs)} pairs:")
    by_a = {}
    for p in T.pairs:
        by_a.setdefault(p.a_index, []).append(p.b_index)
    for a in sorted(by_a):
        print(f"  a{a}: b{sorted(by_a[a])}")
    print()

    print("portion of the extension owned by each anchor, in sigma order:")
    for x in sigma:
        info = portion_info(c, T, x)
        print(f"  a{x}: {info.kind} portion of length {info.length}")
    print()

    L = reversing_extension(c, T)
    print("one extension reversing all of T:")
    print(" ", " < ".join(L.to_json()))


if __name__ == "__main__":
    main()
