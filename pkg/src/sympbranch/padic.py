"""Base-p digit arithmetic.

Everything downstream reduces to statements about base-p digit strings, so
this module fixes the conventions once: digits are little-endian (index i is
the coefficient of p**i), and containment means digit *equality* on the
support of the smaller number, not digit dominance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt


class Prime(int):
    """Prime modulus, checked by trial division on construction."""

    def __new__(cls, p):
        if isinstance(p, Prime):
            return p
        q = int(p)
        if q < 2 or any(q % d == 0 for d in range(2, isqrt(q) + 1)):
            raise ValueError(f"p must be prime, got {p!r}")
        return super().__new__(cls, q)


@dataclass(frozen=True)
class PAdicDigits:
    """Canonical little-endian digit string of a nonnegative integer.

    Canonical means no trailing zero digits; indexing past the top digit
    returns 0, so callers never need to pad.
    """

    digits: tuple[int, ...]
    prime: Prime

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("digit index must be nonnegative")
        return self.digits[i] if i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.prime + d
        return v


def to_digits(z: int, p) -> PAdicDigits:
    p = Prime(p)
    if z < 0:
        raise ValueError(f"z must be nonnegative, got {z}")
    out = []
    while z:
        out.append(z % p)
        z //= p
    return PAdicDigits(tuple(out), p)


def digit(z: int, i: int, p) -> int:
    """Digit of z at position i, i.e. the coefficient of p**i."""
    p = Prime(p)
    if z < 0:
        raise ValueError(f"z must be nonnegative, got {z}")
    if i < 0:
        raise IndexError("digit index must be nonnegative")
    return (z // p**i) % p


def lp(z: int, p) -> int:
    """p-adic valuation of z: the position of the lowest nonzero digit."""
    p = Prime(p)
    if z <= 0:
        raise ValueError(f"valuation requires z >= 1, got {z}")
    s = 0
    while z % p == 0:
        z //= p
        s += 1
    return s


def contains(k: int, m: int, p) -> bool:
    """Digit containment k inside m: every nonzero digit of k equals the
    digit of m in the same position.

    For p = 2 this coincides with the digit-dominance condition familiar
    from Lucas' theorem; for odd p it is strictly stronger.
    """
    p = Prime(p)
    if k < 0 or m < 0:
        raise ValueError("containment is defined for nonnegative integers")
    while k:
        kd = k % p
        if kd and kd != m % p:
            return False
        k //= p
        m //= p
    return True


def d_coeff(k: int, m: int, p) -> int:
    """Indicator of digit containment, as a 0/1 coefficient."""
    return 1 if contains(k, m, p) else 0


def bar(a: int, p) -> int:
    """Digit complement p - 1 - a."""
    p = Prime(p)
    if not 0 <= a <= p - 1:
        raise ValueError(f"digit must lie in [0, {p - 1}], got {a}")
    return p - 1 - a


def binom_mod_p(m: int, k: int, p) -> int:
    """C(m, k) mod p by Lucas' theorem: the digitwise product of
    C(m_i, k_i) mod p."""
    p = Prime(p)
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    out = 1
    while k or m:
        out = out * comb(m % p, k % p) % p
        if out == 0:
            return 0
        k //= p
        m //= p
    return out
