"""Exact solvers on the independent / reversible landscape of one crown.

Shows the existence threshold for independent non-reversible sets, the
two size formulas on either side of it, and the self-check battery that
cross-verifies the solvers against brute force on a seeded sample.

    python demos/solver_showcase.py
"""

from crownlab import (
    make_crown,
    max_inr_set,
    max_reversible_set,
    min_reversible_cover,
    verify_battery,
)


def main():
    print("independent non-reversible sets exist exactly when n <= 2k")
    for (n, k) in [(3, 1), (4, 2), (5, 2), (4, 3), (3, 3), (3, 4)]:
        r = max_inr_set(make_crown(n, k))
        tag = f"largest has {r.value} pairs" if r else "none exist"
        side = "n <= 2k" if n <= 2 * k else "n > 2k"
        print(f"  S_{n}^{k} ({side}): {tag}")
    print()

    print("both size formulas, checked exactly:")
    for (n, k) in [(4, 2), (4, 3), (5, 3), (5, 4)]:
        r = max_inr_set(make_crown(n, k))
        want = 2 + (2 * k + 2 - n) * (2 * k + 1 - n) // 2
        print(f"  k < n <= 2k at S_{n}^{k}: {r.value} == 2 + (2k+2-n)(2k+1-n)/2 = {want}")
        assert r.value == want
    for (n, k) in [(3, 3), (3, 4)]:
        r = max_inr_set(make_crown(n, k))
        want = (k + 1) * (k + 2) // 2 + 2 - n
        print(f"  n <= k      at S_{n}^{k}: {r.value} == (k+1)(k+2)/2 + 2 - n = {want}")
        assert r.value == want
    print()

    c = make_crown(4, 2)
    rev = max_reversible_set(c)
    cov = min_reversible_cover(c)
    print(f"S_4^2: largest reversible set {rev.value} pairs, "
          f"cover needs {cov.value} reversible sets")
    print(f"cover parts: {[sorted((p.a_index, p.b_index) for p in part.pairs) for part in cov.witness.parts]}")
    print()

    report = verify_battery(c, seed=7)
    print(f"self-check battery on S_4^2 (seed 7): ok = {report.ok}")
    for check in report.checks:
        print(f"  [{check.status:>4}] {check.name}: {check.detail}")


if __name__ == "__main__":
    main()
