"""Contraction and expansion moves on independent sets of critical pairs.

Each move picks a circle position i, drops the blocking pairs at one end
of the window there, and adds replacements at the other end.  Sizes obey
an exact bookkeeping identity and independence is preserved.  The script
also shows fans and the gap profile of a strict 3-cycle.

    python demos/transform_play.py
"""

from crownlab import (
    blocking_pairs,
    canonical_set,
    cycle_gaps,
    fan,
    inr_extremal,
    make_crown,
    minr_d3_certify,
    sac3,
    saturate_fans,
    spread,
    transform,
    transform_with_trace,
)
from crownlab.extremal import downset_of_cycle


def show(tag, S):
    print(f"  {tag}: {sorted((p.a_index, p.b_index) for p in S.pairs)}")


def main():
    c = make_crown(3, 3)
    S = inr_extremal(c)
    print(f"start at S_3^3 with the extremal independent non-reversible set")
    show("S", S)

    i = 2
    rep = blocking_pairs(c, "expansion", i, S)
    print(f"expansion blocking pairs at position {i}:")
    show("first end", rep.first_set)
    show("last end", rep.last_set)
    print()

    out, step = transform_with_trace(c, "DLEF", i, S)
    print(f"DLEF at position {i}: drop the last-end pairs, fill the first end")
    print(f"  removed {sorted((p.a_index, p.b_index) for p in step.removed)}")
    print(f"  added   {sorted((p.a_index, p.b_index) for p in step.added)}")
    show("result", out)
    target = canonical_set(c, (1, 2, 3, 4))
    print(f"  result equals the canonical set of (1,2,3,4): {out.members() == target.members()}")
    print()

    dfel = transform(c, "DFEL", i, S)
    print("size bookkeeping: |DFEL| + |DLEF| = 2|S|")
    print(f"  {len(dfel.pairs)} + {len(out.pairs)} = {2 * len(S.pairs)}")
    print()

    C = sac3(c)
    gaps = cycle_gaps(c, C)
    sp = spread(c, C)
    print(f"strict 3-cycle {[(p.a_index, p.b_index) for p in C.pairs]}")
    print(f"  gaps {gaps}, spread {sp.spread}")
    print()

    c2 = make_crown(4, 3)
    S2 = inr_extremal(c2)
    C2 = minr_d3_certify(c2, S2)
    for direction in ("f", "b"):
        F = fan(c2, C2, 1, direction)
        show(f"{'forward' if direction == 'f' else 'backward'} fan at arc 1", F)
    D = downset_of_cycle(c2, C2)
    fixed, steps = saturate_fans(c2, D, C2, "fff")
    print(f"saturating fans on the full downset applies {len(steps)} steps")
    print(f"  (every fan is already inside, the set is a fixed point)")
    assert fixed.members() == D.members()


if __name__ == "__main__":
    main()
