"""Command-line front end.

Machine-readable output (JSON, or CSV for sweeps) goes to stdout; short
human summaries go to stderr.  Exit codes: 0 success, 1 a verification
failed, 2 usage or domain error, 3 a resource guard refused the job.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import ceil

from .crown_core import Crown, CrownDomainError, ResourceGuardError
from .critpairs import PairSet, build_graph, is_independent
from .reversibility import Reversible, classify_sac3, reversibility_certificate
from . import canonical as canon
from . import extremal as ext
from . import solvers as sv
from . import transforms as tf
from .guards import set_nk_override


def _emit(obj, note: str = "") -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if note:
        print(note, file=sys.stderr)


def _int(value: "str | None", flag: str) -> int:
    if value is None:
        raise CrownDomainError(f"this verb needs {flag}")
    try:
        return int(value)
    except ValueError:
        raise CrownDomainError(f"{flag} must be an integer, got {value!r}") from None


def _crown(args) -> Crown:
    return Crown(_int(args.n, "--n"), _int(args.k, "--k"))


def _crown_if_given(args) -> "Crown | None":
    if args.n is None or args.k is None:
        return None
    return _crown(args)


def _load_set(args) -> PairSet:
    if not args.set:
        raise CrownDomainError("this verb needs --set FILE")
    with open(args.set, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return PairSet.from_json(obj, _crown_if_given(args))


def _save(obj: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def _parse_sigma(crown: Crown, args) -> tuple:
    if args.sigma:
        items = []
        for tok in args.sigma.split(","):
            tok = tok.strip().replace("_", "")
            items.append(int(tok) if tok.isdigit() else tok)
        return canon.sigma_from_json(crown, items)
    if args.base is not None and args.pattern is not None:
        return canon.sigma_decode(crown, args.base, args.pattern)
    # default anchor: the k+1 consecutive minimals starting at a_1
    return tuple(range(1, crown.k + 2))


def _formulas(crown: Crown) -> dict:
    n, k, m = crown.n, crown.k, crown.circle
    if n <= k:
        maxinr = (k + 1) * (k + 2) // 2 + 2 - n
    elif n <= 2 * k:
        maxinr = 2 + (2 * k + 2 - n) * (2 * k + 1 - n) // 2
    else:
        maxinr = None
    return {
        "n": n,
        "k": k,
        "circle": m,
        "inc_count": m * (k + 1),
        "alpha": (k + 1) * (k + 2) // 2,
        "chi": ceil(2 * m / (k + 2)),
        "dim": ceil(2 * m / (k + 2)),
        "maxrev": (k + 1) * (k + 2) // 2,
        "max_inr": maxinr,
        "inr_exists": n <= 2 * k,
        "canonical_count": m * (1 << k),
    }


def cmd_info(args) -> int:
    crown = _crown(args)
    _emit(_formulas(crown), f"S_{crown.n}^{crown.k}: closed-form values (no search)")
    return 0


def cmd_graph(args) -> int:
    crown = _crown(args)
    g = build_graph(crown)
    out = {
        "n": crown.n,
        "k": crown.k,
        "vertices": len(g),
        "edge_count": g.edge_count,
        "pairs": [[p.a_index, p.b_index] for p in g.vertices],
        "edges": [[g.index[p], g.index[q]] for p, q in g.edges()],
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(g.to_dimacs())
        out["dimacs"] = args.out
    _emit(out, f"G_{crown.n}^{crown.k}: {len(g)} vertices, {g.edge_count} edges")
    return 0


def cmd_solver(args) -> int:
    crown = _crown(args)
    if args.verb == "alpha":
        rep = sv.max_independent_set(build_graph(crown))
    elif args.verb == "chi":
        rep = sv.chromatic_number(build_graph(crown))
    elif args.verb == "dim":
        rep = sv.min_reversible_cover(crown)
    elif args.verb == "maxrev":
        rep = sv.max_reversible_set(crown)
    else:
        rep = sv.max_inr_set(crown)
        if rep is None:
            _emit(
                {"quantity": "maxinr", "n": crown.n, "k": crown.k, "value": None},
                "no independent non-reversible sets exist (n > 2k)",
            )
            return 0
    if args.out and isinstance(rep.witness, PairSet):
        _save(rep.witness.to_json(), args.out)
    _emit(rep.to_json(), f"{rep.quantity}(S_{crown.n}^{crown.k}) = {rep.value}")
    return 0


def cmd_canonical(args) -> int:
    crown = _crown(args)
    sigma = _parse_sigma(crown, args)
    T = canon.canonical_set(crown, sigma)
    base, pattern = canon.sigma_encode(crown, sigma)
    out = {
        "sigma": [f"a{i}" for i in sigma],
        "base": base,
        "pattern": pattern,
        "size": len(T),
        "set": T.to_json(),
    }
    if args.out:
        _save(T.to_json(), args.out)
    _emit(out, f"T(sigma): {len(T)} pairs")
    return 0


def cmd_check(args) -> int:
    S = _load_set(args)
    crown = S.crown
    cert = reversibility_certificate(crown, S)
    reversible = isinstance(cert, Reversible)
    out = {
        "n": crown.n,
        "k": crown.k,
        "size": len(S),
        "independent": is_independent(crown, S),
        "reversible": reversible,
        "strict_cycle_size": None,
        "class": None,
    }
    if reversible:
        out["extension"] = cert.extension.to_json()
    else:
        C = cert.cycle
        out["strict_cycle_size"] = len(C)
        out["cycle"] = [[p.a_index, p.b_index] for p in C.pairs]
        if len(C) == 3:
            out["class"] = classify_sac3(crown, C)
    _emit(
        out,
        "reversible"
        if reversible
        else f"non-reversible (strict {out['strict_cycle_size']}-cycle)",
    )
    return 0


def cmd_transform(args) -> int:
    if not args.op:
        raise CrownDomainError("transform needs --op {dfcl,dlcf,dfel,dlef}")
    if args.i is None:
        raise CrownDomainError("transform needs --i POSITION")
    S = _load_set(args)
    crown = S.crown
    op = args.op.upper()
    result, step = tf.transform_with_trace(crown, op, args.i, S)
    out = {
        "op": op,
        "i": crown.norm(args.i),
        "input_size": len(S),
        "removed": [[p.a_index, p.b_index] for p in step.removed],
        "added": [[p.a_index, p.b_index] for p in step.added],
        "result": result.to_json(),
    }
    if args.out:
        _save(result.to_json(), args.out)
    _emit(out, f"{op}({args.i}): {len(S)} -> {len(result)} pairs")
    return 0


def cmd_extremal(args) -> int:
    crown = _crown(args)
    fam = args.family
    if not fam:
        raise CrownDomainError(
            "extremal needs --family {canonical,noncanonical,inr,sac3,matching,downset}"
        )
    out: dict = {"family": fam, "n": crown.n, "k": crown.k}
    if fam == "canonical":
        sigma = _parse_sigma(crown, args)
        S = canon.canonical_set(crown, sigma)
        out["sigma"] = [f"a{i}" for i in sigma]
    elif fam == "noncanonical":
        S = canon.noncanonical_extremal(crown, args.i if args.i is not None else 1)
    elif fam == "inr":
        S = ext.inr_extremal(crown)
    elif fam == "sac3":
        C = ext.sac3(crown)
        S = C.as_pairset()
        out["cycle"] = [[p.a_index, p.b_index] for p in C.pairs]
        out["class"] = classify_sac3(crown, C)
        rep = tf.spread(crown, C)
        out["gaps"] = list(rep.gaps)
        out["spread"] = rep.spread
    else:  # matching cycle, or its down set
        t = args.t if args.t is not None else 1
        spec = ext.default_matching_spec(crown, t)
        C = ext.matching_cycle(crown, spec)
        out["t"] = t
        out["sizes"] = list(spec.sizes)
        out["cycle"] = [[p.a_index, p.b_index] for p in C.pairs]
        S = C.as_pairset() if fam == "matching" else ext.downset_of_cycle(crown, C)
    out["size"] = len(S)
    out["set"] = S.to_json()
    if args.out:
        _save(S.to_json(), args.out)
    _emit(out, f"{fam}: {len(S)} pairs")
    return 0


def cmd_hyperedges(args) -> int:
    crown = _crown(args)
    cap = args.max_size if args.max_size is not None else 3
    counts: dict = {}
    edges = []
    for H in sv.enumerate_min_nonreversible(crown, cap):
        counts[len(H)] = counts.get(len(H), 0) + 1
        edges.append([[p.a_index, p.b_index] for p in H])
    out = {
        "n": crown.n,
        "k": crown.k,
        "max_size": cap,
        "counts": {str(s): c for s, c in sorted(counts.items())},
        "hyperedges": edges,
    }
    if args.out:
        _save(out, args.out)
    _emit(out, f"{len(edges)} minimal non-reversible sets of size <= {cap}")
    return 0


def cmd_verify(args) -> int:
    crown = _crown(args)
    rep = sv.verify_battery(crown, seed=args.seed)
    c = rep.counts()
    _emit(
        rep.to_json(),
        f"S_{crown.n}^{crown.k}: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip",
    )
    return 0 if rep.ok else 1


def _parse_range(txt: "str | None", flag: str) -> range:
    if txt is None:
        raise CrownDomainError(f"sweep needs {flag} LO..HI")
    try:
        if ".." in txt:
            lo, hi = txt.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(txt)
        return range(v, v + 1)
    except ValueError:
        raise CrownDomainError(f"bad range {txt!r} for {flag}") from None


def cmd_sweep(args) -> int:
    rows = []
    status = 0
    for n in _parse_range(args.n, "--n"):
        for k in _parse_range(args.k, "--k"):
            if n < 3 or k < 0:
                continue
            crown = Crown(n, k)
            if args.verify:
                rep = sv.verify_battery(crown, seed=args.seed)
                c = rep.counts()
                row = {
                    "n": n,
                    "k": k,
                    "ok": rep.ok,
                    "pass": c["pass"],
                    "fail": c["fail"],
                    "skip": c["skip"],
                    "failed": ";".join(
                        ch.name for ch in rep.checks if ch.status == "fail"
                    ),
                }
                if not rep.ok:
                    status = 1
            else:
                row = _formulas(crown)
            rows.append(row)
    if not rows:
        raise CrownDomainError("sweep ranges produced no valid crowns (need n >= 3)")
    if args.csv:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        sys.stdout.write(text)
    else:
        if args.out:
            _save({"rows": rows}, args.out)
        _emit({"rows": rows})
    print(f"swept {len(rows)} crowns", file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crownlab",
        description="Exact computations on crown posets S_n^k and their "
        "critical-pair graphs G_n^k.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)
    verbs = {
        "info": "closed-form counts and formula values for one crown",
        "graph": "export the critical-pair graph (JSON; --out writes DIMACS)",
        "alpha": "exact maximum independent set",
        "chi": "exact chromatic number",
        "dim": "exact minimum reversible cover (poset dimension)",
        "maxrev": "exact maximum reversible set",
        "maxinr": "exact maximum independent non-reversible set",
        "canonical": "build the canonical reversible set T(sigma)",
        "check": "classify a pair-set file (independence/reversibility/cycle)",
        "transform": "apply one contraction/expansion transform to a set file",
        "extremal": "emit a named extremal family",
        "hyperedges": "minimal non-reversible sets up to --max-size",
        "verify": "run the formula battery on one crown",
        "sweep": "run formulas or the battery over (n,k) ranges",
    }
    for verb, help_text in verbs.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--n", default=None, help="n, or LO..HI for sweep")
        p.add_argument("--k", default=None, help="k, or LO..HI for sweep")
        p.add_argument("--set", default=None, help="pair-set JSON file")
        p.add_argument("--sigma", default=None, help="comma list like a8,a9,a7")
        p.add_argument("--base", type=int, default=None)
        p.add_argument("--pattern", default=None, help="string of T/L steps")
        p.add_argument("--op", default=None, choices=["dfcl", "dlcf", "dfel", "dlef"])
        p.add_argument("--i", type=int, default=None, help="circle position")
        p.add_argument("--t", type=int, default=None, help="matching cycle half-length")
        p.add_argument(
            "--family",
            default=None,
            choices=["canonical", "noncanonical", "inr", "sac3", "matching", "downset"],
        )
        p.add_argument("--max-size", type=int, default=None, dest="max_size")
        p.add_argument("--out", default=None, help="also write result to this file")
        p.add_argument("--csv", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--verify", action="store_true")
        p.add_argument(
            "--guard-override",
            type=int,
            default=None,
            help="raise the n+k resource guards to this value",
        )
    return ap


_DISPATCH = {
    "info": cmd_info,
    "graph": cmd_graph,
    "alpha": cmd_solver,
    "chi": cmd_solver,
    "dim": cmd_solver,
    "maxrev": cmd_solver,
    "maxinr": cmd_solver,
    "canonical": cmd_canonical,
    "check": cmd_check,
    "transform": cmd_transform,
    "extremal": cmd_extremal,
    "hyperedges": cmd_hyperedges,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # the override lives for this invocation only; callers embedding main()
    # must not inherit a weakened (or raised) guard
    set_nk_override(args.guard_override)
    try:
        return _DISPATCH[args.verb](args)
    except ResourceGuardError as e:
        _emit({"error": str(e), "kind": "resource-guard"}, f"refused: {e}")
        return 3
    except (CrownDomainError, FileNotFoundError, KeyError, ValueError) as e:
        _emit({"error": str(e), "kind": "usage"}, f"error: {e}")
        return 2
    finally:
        set_nk_override(None)


if __name__ == "__main__":
    sys.exit(main())
