"""Named resource guards for the exact solvers and enumerators.

Guards are explicit constants, never raised silently.  The n+k guards can be
overridden by the CROWNLAB_GUARD_MAX_NK environment variable or by
set_nk_override (wired to the CLI --guard-override flag); the non-nk guards
(vertex count, hyperedge size, pattern length) are fixed.
"""

from __future__ import annotations

import os

from .crown_core import Crown, ResourceGuardError

GUARD_DEFAULTS = {
    "mis_vertices": 2000,  # max_independent_set / chromatic_number vertex cap
    "maxrev_nk": 12,       # max_reversible_set
    "maxinr_nk": 10,       # max_inr_set
    "cover_nk": 9,         # min_reversible_cover
    "hyperedge_nk": 9,     # enumerate_min_nonreversible
    "hyperedge_size": 5,   # enumerate_min_nonreversible max_size precondition
    "maxrev_enum_nk": 8,   # enumerate_maximal_reversible
    "canonical_k": 20,     # enumerate_canonical pattern length
}

_nk_override: "int | None" = None

_NK_GUARDS = {"maxrev_nk", "maxinr_nk", "cover_nk", "hyperedge_nk", "maxrev_enum_nk"}


def set_nk_override(value: "int | None") -> None:
    global _nk_override
    _nk_override = value


def guard_value(name: str) -> int:
    base = GUARD_DEFAULTS[name]
    if name in _NK_GUARDS:
        if _nk_override is not None:
            return _nk_override
        env = os.environ.get("CROWNLAB_GUARD_MAX_NK")
        if env is not None:
            return int(env)
    return base


def check_nk(name: str, crown: Crown) -> None:
    cap = guard_value(name)
    if crown.circle > cap:
        raise ResourceGuardError(
            f"guard {name}: n+k = {crown.circle} exceeds {cap} "
            f"(override with CROWNLAB_GUARD_MAX_NK or --guard-override)"
        )


def check_value(name: str, value: int, what: str) -> None:
    cap = guard_value(name)
    if value > cap:
        raise ResourceGuardError(f"guard {name}: {what} = {value} exceeds {cap}")
