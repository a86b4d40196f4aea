"""Inductive systems: families of simple-module levels closed under
restriction.

A family assigns to each rank n a set of omega-indices in [0, n]. The
family is an inductive system when restricting the simples at rank n
yields exactly the simples selected at rank n - 1. Four interval shapes
cover the classification: everything (F), an initial segment L(s), a
final segment R(u) of width u, and a disjoint union LR(s, u). Width
matters: R(u) closes under restriction precisely when u + 1 is a power
of p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branching import branch_omega
from .padic import Prime


@dataclass(frozen=True)
class FamilySpec:
    """Shape of a level family: kind F, L, R, or LR with the cut
    parameters that apply (s for the initial segment, u for the width of
    the final segment)."""

    kind: str
    s: int | None = None
    u: int | None = None

    def __post_init__(self):
        if self.kind not in ("F", "L", "R", "LR"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("L", "LR"):
            if self.s is None or self.s < 0:
                raise ValueError(f"kind {self.kind} needs s >= 0, got {self.s}")
        elif self.s is not None:
            raise ValueError(f"kind {self.kind} takes no s")
        if self.kind in ("R", "LR"):
            if self.u is None or self.u < 1:
                raise ValueError(f"kind {self.kind} needs u >= 1, got {self.u}")
        elif self.u is not None:
            raise ValueError(f"kind {self.kind} takes no u")

    def __str__(self) -> str:
        if self.kind == "F":
            return "F"
        if self.kind == "L":
            return f"L({self.s})"
        if self.kind == "R":
            return f"R({self.u})"
        return f"LR({self.s},{self.u})"


def family_level(spec: FamilySpec, n: int) -> frozenset[int]:
    """Omega-indices the family selects at rank n."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if spec.kind == "F":
        return frozenset(range(n + 1))
    if spec.kind == "L":
        return frozenset(range(min(spec.s, n) + 1))
    if spec.kind == "R":
        return frozenset(range(max(0, n + 1 - spec.u), n + 1))
    return frozenset(range(min(spec.s, n) + 1)) | frozenset(
        range(max(0, n + 1 - spec.u), n + 1)
    )


def branch_set(level, n: int, p) -> frozenset[int]:
    """Omega-indices at rank n - 1 appearing in the restriction of any
    simple the level selects at rank n."""
    p = Prime(p)
    out: set[int] = set()
    for i in sorted(level):
        out.update(lab.index for lab in branch_omega(n, i, p).support())
    return frozenset(out)


def first_closure_failure(spec: FamilySpec, p, n_max: int) -> int | None:
    """Smallest rank r in [2, n_max] where restricting the family's level
    at rank r does not reproduce its level at rank r - 1, or None."""
    p = Prime(p)
    for r in range(2, n_max + 1):
        if branch_set(family_level(spec, r), r, p) != family_level(spec, r - 1):
            return r
    return None


def verify_family(spec: FamilySpec, p, n_max: int) -> bool:
    """Whether the family is closed under restriction at every rank pair
    (r, r - 1) for r up to n_max."""
    return first_closure_failure(spec, p, n_max) is None


def is_R_inductive(u: int, p, n_max: int) -> bool:
    """Whether the width-u final-segment family is an inductive system,
    decided over ranks up to n_max."""
    return verify_family(FamilySpec("R", u=u), p, n_max)


def r_catalogue(p, u_max: int) -> list[int]:
    """Widths u <= u_max with u + 1 a power of p: the widths whose
    final-segment families close under restriction."""
    p = Prime(p)
    out = []
    q = p
    while q - 1 <= u_max:
        out.append(q - 1)
        q *= p
    return out


def _is_power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def _infer_top_shape(level: frozenset[int], n: int, p: int):
    """Candidate FamilySpec matching one level set at its own rank, or
    (None, reason). Ambiguities at small rank resolve canonically:
    full set means F, an initial segment means L(s) with minimal s, a
    final segment means R(u) with minimal u."""
    if not level:
        return None, f"level set at rank {n} is empty"
    if min(level) < 0 or max(level) > n:
        return None, f"level set at rank {n} leaves [0, {n}]"
    lo, hi = min(level), max(level)
    if level == frozenset(range(lo, hi + 1)):
        if lo == 0 and hi == n:
            return FamilySpec("F"), ""
        if lo == 0:
            return FamilySpec("L", s=hi), ""
        if hi == n:
            u = n + 1 - lo
            if not _is_power_of(u + 1, p):
                return None, (
                    f"final segment of width {u} at rank {n}: {u + 1} is not "
                    f"a power of {p}"
                )
            return FamilySpec("R", u=u), ""
        return None, f"level set at rank {n} is an interior interval"
    runs = sorted(level)
    gaps = [
        j for j in range(1, len(runs)) if runs[j] != runs[j - 1] + 1
    ]
    if len(gaps) == 1 and runs[0] == 0 and runs[-1] == n:
        s = runs[gaps[0] - 1]
        u = n + 1 - runs[gaps[0]]
        if not _is_power_of(u + 1, p):
            return None, (
                f"final segment of width {u} at rank {n}: {u + 1} is not "
                f"a power of {p}"
            )
        return FamilySpec("LR", s=s, u=u), ""
    return None, f"level set at rank {n} is not a recognized truncation pattern"


def classify_truncation(levels: dict, p):
    """Identify the family matching an observed truncation of levels.

    `levels` maps consecutive ranks to iterables of omega-indices (a gap
    in the ranks raises ValueError). Returns (FamilySpec, reason) with an
    empty reason on success, or (None, reason) explaining the first
    obstruction: a closure failure between adjacent ranks, a level set of
    unrecognized shape, a final-segment width outside the catalogue, or a
    rank whose level set disagrees with the inferred family.
    """
    p = Prime(p)
    if not levels:
        raise ValueError("no levels given")
    ranks = sorted(levels)
    if ranks[0] < 1:
        raise ValueError(f"ranks must be >= 1, got {ranks[0]}")
    if ranks != list(range(ranks[0], ranks[-1] + 1)):
        raise ValueError(f"ranks must be consecutive, got {ranks}")
    sets = {r: frozenset(levels[r]) for r in ranks}
    for r in ranks:
        if sets[r] and (min(sets[r]) < 0 or max(sets[r]) > r):
            raise ValueError(f"level set at rank {r} leaves [0, {r}]")
    for r in ranks[1:]:
        if branch_set(sets[r], r, p) != sets[r - 1]:
            return None, f"closure fails from rank {r} to rank {r - 1}"
    top = ranks[-1]
    spec, reason = _infer_top_shape(sets[top], top, int(p))
    if spec is None:
        return None, reason
    for r in ranks:
        if family_level(spec, r) != sets[r]:
            return None, f"rank {r} disagrees with {spec}"
    return spec, ""
