"""First contact with crowns and their critical-pair graphs.

Builds a few small crowns, prints the basic counts, and checks the three
closed formulas (pair count, independence number, chromatic number) against
the exact solvers.  Run it with no arguments:

    python demos/tour.py
"""

from crownlab import (
    build_graph,
    chromatic_number,
    inc_pairs,
    incomparable,
    leq,
    make_crown,
    max_independent_set,
    parse_element,
    phi_pair,
    tau_pair,
)
from crownlab.critpairs import as_pair


def main():
    c = make_crown(4, 2)
    m = c.n + c.k
    print(f"crown S_{c.n}^{c.k}: circle length {m}, ground set {2 * m} elements")
    print(f"each minimal a_i sits below every b_j except the {c.k + 1} of them")
    print(f"at circle offsets 0..{c.k} ahead of i")
    print()

    a1 = parse_element("a1")
    for j in range(1, m + 1):
        b = parse_element(f"b{j}")
        rel = "a1 < b%d" % j if leq(c, a1, b) else "a1 incomparable to b%d" % j
        print(f"  offset {(j - 1) % m}: {rel}")
    print()

    pairs = inc_pairs(c)
    print(f"critical pairs: {len(pairs)} total, formula gives (n+k)(k+1) = {m * (c.k + 1)}")

    p = as_pair(c, (1, 2))
    print(f"rotating {p} by tau_1 gives {as_pair(c, tau_pair(c, 1, p))}")
    print(f"reflecting {p} by phi gives {as_pair(c, phi_pair(c, p))}")
    print()

    print("formula check across small crowns")
    print(f"{'crown':>8} {'pairs':>6} {'alpha':>6} {'chi':>4}")
    for n in range(3, 6):
        for k in range(0, 4):
            cc = make_crown(n, k)
            g = build_graph(cc)
            npairs = len(inc_pairs(cc))
            alpha = max_independent_set(g).value
            chi = chromatic_number(g).value
            assert npairs == (n + k) * (k + 1)
            assert alpha == (k + 1) * (k + 2) // 2
            assert chi == -(-2 * (n + k) // (k + 2))
            print(f"  S_{n}^{k:<2} {npairs:>6} {alpha:>6} {chi:>4}")
    print("all three formulas confirmed by the exact solvers")

    # sanity: incomparability is symmetric in presentation but one-sided in fact
    b1 = parse_element("b1")
    assert incomparable(c, a1, b1) and not leq(c, a1, b1)


if __name__ == "__main__":
    main()
