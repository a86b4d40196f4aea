"""Exact dimensions of Weyl modules and their simple quotients.

The Weyl module dimension is a closed binomial difference. Simple
dimensions follow by inclusion-exclusion down the factor list: the
factor sets are multiplicity free, so dim of the simple with top l is
the Weyl dimension minus the simple dimensions of the factors above l.
The recursion starts at l = n + 1 (the trivial module) and every value
is an exact integer.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .branching import branch_omega, branch_pi
from .labels import LabelMultiset, PiLabel
from .padic import Prime
from .weyl import factors_lucas


def weyl_dim(n: int, i: int) -> int:
    """Dimension of the fundamental Weyl module with omega-index i at
    rank n: C(2n, i) - C(2n, i - 2). Rank 0 is the trivial group, with
    only the trivial module."""
    if n < 0:
        raise ValueError(f"rank must be >= 0, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"omega-index must lie in [0, {n}], got {i}")
    low = comb(2 * n, i - 2) if i >= 2 else 0
    return comb(2 * n, i) - low


def weyl_dim_pi(n: int, m: int) -> int:
    """Same in pi-coordinates: the Weyl module V_m^n."""
    if not 1 <= m <= n + 1:
        raise ValueError(f"pi-index must lie in [1, {n + 1}], got {m}")
    return weyl_dim(n, n + 1 - m)


@lru_cache(maxsize=None)
def _irr_dim_pi(n: int, m: int, p: int) -> int:
    total = weyl_dim_pi(n, m)
    for q in factors_lucas(n, m, p):
        if q > m:
            total -= _irr_dim_pi(n, q, p)
    return total


def irr_dim_pi(n: int, m: int, p) -> int:
    """Dimension of the simple module pi_m^n in characteristic p."""
    p = Prime(p)
    if not 1 <= m <= n + 1:
        raise ValueError(f"pi-index must lie in [1, {n + 1}], got {m}")
    return _irr_dim_pi(n, m, int(p))


def irr_dim(n: int, i: int, p) -> int:
    """Dimension of the simple module omega_i^n in characteristic p."""
    if n < 0:
        raise ValueError(f"rank must be >= 0, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"omega-index must lie in [0, {n}], got {i}")
    return irr_dim_pi(n, n + 1 - i, p)


def check_branch_dims(n: int, i: int, p) -> bool:
    """Dimension conservation under restriction: dim of the simple
    omega_i^n equals the multiplicity-weighted sum of the dimensions of
    its restriction's factors at rank n - 1."""
    p = Prime(p)
    lhs = irr_dim(n, i, p)
    rhs = sum(
        mult * irr_dim(n - 1, lab.index, p)
        for lab, mult in branch_omega(n, i, p).items()
    )
    return lhs == rhs


def _factor_multiset(n: int, l: int, p) -> LabelMultiset:
    """Factors of V_l^n as a pi-label multiset (each with multiplicity 1),
    empty for l outside [1, n + 1]."""
    if not 1 <= l <= n + 1:
        return LabelMultiset()
    return LabelMultiset((PiLabel(m, n), 1) for m in factors_lucas(n, l, p))


def check_filtration_identity(n: int, l: int, p) -> bool:
    """Restriction of a Weyl module, computed two ways.

    Branching every composition factor of V_l^n must match the factor
    content of the Weyl filtration of the restriction, which is the
    neighbor combination V_{l-1} + 2 V_l + V_{l+1} at rank n - 1.
    """
    p = Prime(p)
    if n < 2:
        raise ValueError(f"identity needs rank >= 2, got {n}")
    if not 1 <= l <= n + 1:
        raise ValueError(f"pi-index must lie in [1, {n + 1}], got {l}")
    lhs = LabelMultiset()
    for m in factors_lucas(n, l, p):
        lhs = lhs + branch_pi(n, m, p)
    rhs = (
        _factor_multiset(n - 1, l - 1, p)
        + _factor_multiset(n - 1, l, p).scaled(2)
        + _factor_multiset(n - 1, l + 1, p)
    )
    return lhs == rhs


def dims_table(n: int, p) -> list[dict]:
    """One row per omega-index at rank n: both coordinates, the Weyl
    dimension, and the simple dimension."""
    p = Prime(p)
    rows = []
    for i in range(n + 1):
        rows.append(
            {
                "i_omega": i,
                "i_pi": n + 1 - i,
                "weyl_dim": weyl_dim(n, i),
                "irr_dim": irr_dim(n, i, p),
            }
        )
    return rows
