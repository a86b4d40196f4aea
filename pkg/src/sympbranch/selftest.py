"""Cross-checks of the engine's internal identities over a parameter grid.

Every identity here has two independent routes inside the package, so a
failure pinpoints a regression without external data: the two factor-set
constructions must agree, tuples must round-trip through their factors,
the greedy maximal tuple must reach the largest factor, the socle formula
must match the poset minimum, restriction structure must flatten to the
branching multiset, dimensions must be conserved, and the digitwise
binomial must reproduce the plain binomial mod p.

The grid is (p, n, index) in lexicographic order, so the first failure
reported is deterministic. Grid bounds come from the SYMPBRANCH_GRID
environment variable ("p_max:n_max") unless given explicitly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .branching import branch_omega, restriction_structure
from .dims import check_branch_dims, check_filtration_identity
from .padic import binom_mod_p, contains
from .weyl import (
    FactorPoset,
    factors_lucas,
    factors_reflections,
    is_irreducible,
    sigma_max,
    socle_factor,
)

GRID_ENV_VAR = "SYMPBRANCH_GRID"
DEFAULT_P_MAX = 7
DEFAULT_N_MAX = 60
FULL_N_MAX = 40
LUCAS_M_MAX = 200


@dataclass(frozen=True)
class Failure:
    """One failed check at one grid point. For the binomial checks the n
    slot holds m and the index slot holds k."""

    check: str
    p: int
    n: int
    index: int
    expected: object
    got: object

    def __str__(self) -> str:
        return (
            f"{self.check} at p={self.p}, n={self.n}, index={self.index}: "
            f"expected {self.expected}, got {self.got}"
        )


def default_grid() -> tuple[int, int]:
    """Grid bounds (p_max, n_max), honoring SYMPBRANCH_GRID="p_max:n_max"."""
    raw = os.environ.get(GRID_ENV_VAR)
    if raw is None:
        return DEFAULT_P_MAX, DEFAULT_N_MAX
    parts = raw.split(":")
    if len(parts) != 2:
        raise ValueError(
            f"{GRID_ENV_VAR} must look like 'p_max:n_max', got {raw!r}"
        )
    try:
        p_max, n_max = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(
            f"{GRID_ENV_VAR} must hold two integers, got {raw!r}"
        ) from None
    if p_max < 2 or n_max < 1:
        raise ValueError(f"{GRID_ENV_VAR} bounds out of range: {raw!r}")
    return p_max, n_max


def primes_up_to(p_max: int) -> list[int]:
    return [q for q in range(2, p_max + 1) if all(q % d for d in range(2, q))]


def _checks_for_prime(p: int, n_max: int, full_n_max: int) -> Iterator[Failure]:
    for m in range(LUCAS_M_MAX + 1):
        for k in range(m + 1):
            expected = comb(m, k) % p
            got = binom_mod_p(m, k, p)
            if got != expected:
                yield Failure("lucas-binomial", p, m, k, expected, got)
            if contains(k, m, p) and got != 1:
                yield Failure("containment-unit", p, m, k, 1, got)
    for n in range(1, n_max + 1):
        full = n <= full_n_max
        for l in range(1, n + 2):
            fl = factors_lucas(n, l, p)
            fr = factors_reflections(n, l, p)
            if fl != fr:
                yield Failure("factors-equivalence", p, n, l, fl, fr)
                continue
            if not full:
                continue
            poset = FactorPoset(n, l, p)
            for m in fl:
                back = poset.tuples[m].apply()
                if back != m:
                    yield Failure("tuple-roundtrip", p, n, l, m, back)
            top = sigma_max(n, l, p).apply()
            if top != max(fl):
                yield Failure("sigma-max", p, n, l, max(fl), top)
            soc = socle_factor(n, l, p)
            if soc != poset.minimum():
                yield Failure("socle-minimum", p, n, l, poset.minimum(), soc)
            single = is_irreducible(n, l, p)
            if single != (len(fl) == 1):
                yield Failure(
                    "irreducible-iff-single", p, n, l, len(fl) == 1, single
                )
            if n >= 2 and not check_filtration_identity(n, l, p):
                yield Failure("filtration-identity", p, n, l, True, False)
        if not full:
            continue
        for i in range(n + 1):
            rs = restriction_structure(n, i, p)
            flat = rs.flatten().to_omega()
            br = branch_omega(n, i, p)
            if flat != br:
                yield Failure("restriction-flatten", p, n, i, br, flat)
            if rs.layers != rs.layers[::-1]:
                yield Failure(
                    "restriction-palindrome", p, n, i, "palindrome", rs.layers
                )
            if not check_branch_dims(n, i, p):
                yield Failure("branch-dims", p, n, i, True, False)


def run_selftest(
    p_max: int | None = None,
    n_max: int | None = None,
    full_n_max: int = FULL_N_MAX,
    max_failures: int = 1,
) -> list[Failure]:
    """Sweep the grid and return up to max_failures failures, in grid
    order; an empty list means every check passed."""
    env_p, env_n = default_grid()
    p_max = env_p if p_max is None else p_max
    n_max = env_n if n_max is None else n_max
    failures: list[Failure] = []
    for p in primes_up_to(p_max):
        for failure in _checks_for_prime(p, n_max, min(full_n_max, n_max)):
            failures.append(failure)
            if len(failures) >= max_failures:
                return failures
    return failures
