"""Restriction of simple modules from rank n to rank n - 1.

The clean statements live in pi-coordinates: restricting the simple
pi_i^n gives pi_{i-1} once, pi_i twice, and pi_{i-1+2p^t} with a digit
coefficient for each t >= 0, everything read at rank n - 1 and
out-of-range labels dropped.

Beyond the multiset of factors, the restriction splits as a doubled
direct summand plus a self-dual piece D whose socle series is a
palindrome; `restriction_structure` returns that finer data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .labels import LabelMultiset, OmegaLabel, PiLabel
from .padic import Prime, digit, lp


def eps(i: int, p) -> int:
    """1 unless the lowest nonzero digit of i equals p - 1, else 0."""
    p = Prime(p)
    if i < 1:
        raise ValueError(f"pi-index must be >= 1, got {i}")
    return 0 if digit(i, lp(i, p), p) == p - 1 else 1


def b_coeff(t: int, i: int, p) -> int:
    """Multiplicity of pi_{i-1+2p^t} in the restriction of pi_i.

    Zero unless p^t divides i; then 2, 0, or 1 according to whether the
    digit of i at position t is 0, p - 1, or anything else.
    """
    p = Prime(p)
    if t < 0:
        raise ValueError(f"digit position must be >= 0, got {t}")
    if i < 1:
        raise ValueError(f"pi-index must be >= 1, got {i}")
    if i % p**t:
        return 0
    c = digit(i, t, p)
    if c == 0:
        return 2
    if c == p - 1:
        return 0
    return 1


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be >= 1 to restrict, got {n}")


def branch_pi(n: int, i: int, p) -> LabelMultiset:
    """Factors of the restriction of the simple pi_i^n, as pi-labels at
    rank n - 1."""
    p = Prime(p)
    _check_rank(n)
    if not 1 <= i <= n + 1:
        raise ValueError(f"pi-index must lie in [1, {n + 1}], got {i}")
    rank = n - 1
    entries = [(PiLabel(i - 1, rank), 1), (PiLabel(i, rank), 2)]
    t = 0
    while i - 1 + 2 * p**t <= n:
        entries.append((PiLabel(i - 1 + 2 * p**t, rank), b_coeff(t, i, p)))
        t += 1
    return LabelMultiset(entries)


def branch_omega(n: int, i: int, p) -> LabelMultiset:
    """Factors of the restriction of the simple omega_i^n, as omega-labels
    at rank n - 1. The trivial module i = 0 restricts to itself."""
    p = Prime(p)
    _check_rank(n)
    if not 0 <= i <= n:
        raise ValueError(f"omega-index must lie in [0, {n}], got {i}")
    if i == 0:
        return LabelMultiset([(OmegaLabel(0, n - 1), 1)])
    return branch_pi(n, n + 1 - i, p).to_omega()


@dataclass(frozen=True)
class RestrictionStructure:
    """Splitting of the restriction of the simple omega_i^n to rank n - 1.

    `split` is the complementary direct summand (the doubled factor, or
    the whole restriction when i = 0); `layers` is the socle series of
    the remaining self-dual summand D, socle first, each layer semisimple.
    Labels are pi-labels at rank n - 1; convert with `.to_omega()`.
    """

    n: int
    i: int
    p: Prime
    split: LabelMultiset
    layers: tuple[LabelMultiset, ...] = field(default=())

    @property
    def is_completely_reducible(self) -> bool:
        return len(self.layers) <= 1

    @property
    def middle(self) -> LabelMultiset:
        """The central layer of D, empty when D = 0."""
        if not self.layers:
            return LabelMultiset()
        return self.layers[len(self.layers) // 2]

    @property
    def d_submodule_count(self) -> int:
        """Number of submodules of D, read off the layer shape: one per
        cut between layers plus the two extra cuts a split middle layer
        admits, and 1 for D = 0."""
        if not self.layers:
            return 1
        count = len(self.layers) + 1
        if len(self.middle) == 2:
            count += 2
        return count

    def flatten(self) -> LabelMultiset:
        """Multiset of all factors: split plus every layer. Equals
        branch_omega(n, i, p) converted to pi-labels."""
        out = self.split
        for layer in self.layers:
            out = out + layer
        return out


def restriction_structure(n: int, i: int, p) -> RestrictionStructure:
    """Compute the splitting for the simple omega_i^n, 0 <= i <= n."""
    p = Prime(p)
    _check_rank(n)
    if not 0 <= i <= n:
        raise ValueError(f"omega-index must lie in [0, {n}], got {i}")
    rank = n - 1
    if i == 0:
        return RestrictionStructure(
            n, i, p, LabelMultiset([(PiLabel(n, rank), 1)]), ()
        )
    ip = n + 1 - i
    split = LabelMultiset([(PiLabel(ip, rank), 2)])
    d = lp(ip, p)
    t = 0
    while ip - 1 + 2 * p**t <= n:
        t += 1
    dp = min(d, t)
    middle_entries = [(PiLabel(ip - 1, rank), 1)]
    if eps(ip, p) == 1:
        middle_entries.append((PiLabel(ip - 1 + 2 * p**d, rank), 1))
    middle = LabelMultiset(middle_entries)
    if not middle and dp == 0:
        return RestrictionStructure(n, i, p, split, ())
    wrap = [
        LabelMultiset([(PiLabel(ip - 1 + 2 * p**q, rank), 1)]) for q in range(dp)
    ]
    layers = tuple(wrap + [middle] + wrap[::-1])
    return RestrictionStructure(n, i, p, split, layers)


def is_completely_reducible(n: int, i: int, p) -> bool:
    """Whether the restriction of the simple omega_i^n is semisimple."""
    return restriction_structure(n, i, p).is_completely_reducible


def d_submodule_count(n: int, i: int, p) -> int:
    """Number of submodules of the non-split summand D of the restriction
    of the simple omega_i^n."""
    return restriction_structure(n, i, p).d_submodule_count
