"""Composition factors and submodule structure of fundamental Weyl modules.

Labels here are pi-coordinates at rank n: the Weyl module V_l^n has top
pi_l, and its composition factors form a multiplicity-free set of pi-indices
inside [1, n+1]. Two independent routes compute that set:

* `factors_lucas`: m = l + 2k is a factor exactly when every nonzero base-p
  digit of k equals the matching digit of m (digit containment).
* `factors_reflections`: close l up under admissible reflections
  s_lam(l) = l + 2((-l) mod p^lam), applied with strictly decreasing lam.

Each factor m of V_l^n is reached from l by a unique admissible tuple of
digit positions sigma with m = l^sigma; the union of position intervals
Q(sigma) carried by that tuple determines the submodule order: m lies
below q exactly when Q(q) is contained in Q(m). Order ideals of that
poset enumerate submodules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .padic import Prime, bar, contains, digit, lp, to_digits


@dataclass(frozen=True)
class QSet:
    """Disjoint union of closed integer intervals of digit positions.

    Stored in increasing order. Intervals coming from an admissible
    tuple are separated by gaps, so the decomposition is canonical and
    the tuple can be recovered from it.
    """

    intervals: tuple[tuple[int, int], ...]

    @classmethod
    def from_lambdas(cls, lambdas: tuple[int, ...]) -> "QSet":
        ivs = []
        for j in range(0, len(lambdas), 2):
            ivs.append((lambdas[j + 1], lambdas[j] - 1))
        return cls(tuple(sorted(ivs)))

    def positions(self) -> frozenset[int]:
        out: set[int] = set()
        for lo, hi in self.intervals:
            out.update(range(lo, hi + 1))
        return frozenset(out)

    def __contains__(self, i: int) -> bool:
        return any(lo <= i <= hi for lo, hi in self.intervals)

    def issubset(self, other: "QSet") -> bool:
        return all(
            any(olo <= lo and hi <= ohi for olo, ohi in other.intervals)
            for lo, hi in self.intervals
        )

    def __str__(self) -> str:
        if not self.intervals:
            return "∅"
        return " ∪ ".join(f"[{lo},{hi}]" for lo, hi in self.intervals)


def tuple_admissible(lambdas: tuple[int, ...], l: int, p) -> bool:
    """Whether the tuple of digit positions is admissible for base value l.

    Entries must be strictly decreasing, nonnegative, of even count;
    violations of that shape raise ValueError. The digit conditions on l
    (positions at odd 1-based slots need digit != p-1, at even slots
    digit != 0) decide the return value.
    """
    p = Prime(p)
    if len(lambdas) % 2:
        raise ValueError(f"tuple must have even length, got {lambdas}")
    if any(a < 0 for a in lambdas):
        raise ValueError(f"tuple entries must be nonnegative, got {lambdas}")
    if any(lambdas[j] <= lambdas[j + 1] for j in range(len(lambdas) - 1)):
        raise ValueError(f"tuple entries must strictly decrease, got {lambdas}")
    if l < 0:
        raise ValueError(f"base value must be nonnegative, got {l}")
    for j, lam in enumerate(lambdas):
        d = digit(l, lam, p)
        if j % 2 == 0 and d == p - 1:
            return False
        if j % 2 == 1 and d == 0:
            return False
    return True


@dataclass(frozen=True)
class AdmissibleTuple:
    """Admissible tuple of digit positions for base value `base` at prime p.

    Python tuple comparison on `lambdas` realizes the tuple order
    (entrywise from the left, a proper prefix counting as smaller),
    which is monotone in the resulting value l^sigma.
    """

    lambdas: tuple[int, ...]
    base: int
    prime: Prime

    def __post_init__(self):
        object.__setattr__(self, "prime", Prime(self.prime))
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if not tuple_admissible(self.lambdas, self.base, self.prime):
            raise ValueError(
                f"{self.lambdas} is not admissible for l={self.base}, p={self.prime}"
            )

    @property
    def q_set(self) -> QSet:
        return QSet.from_lambdas(self.lambdas)

    def apply(self) -> int:
        return apply_tuple(self.lambdas, self.base, self.prime)

    def __len__(self) -> int:
        return len(self.lambdas)

    def __str__(self) -> str:
        return "(" + ";".join(str(a) for a in self.lambdas) + ")"


def apply_tuple(lambdas: tuple[int, ...], l: int, p) -> int:
    """Value l^sigma: complement the digits of l on Q(sigma), then add 1
    at each tuple position."""
    p = Prime(p)
    if not tuple_admissible(lambdas, l, p):
        raise ValueError(f"{lambdas} is not admissible for l={l}, p={p}")
    if not lambdas:
        return l
    q = QSet.from_lambdas(lambdas)
    ld = to_digits(l, p)
    width = max(lambdas[0] + 1, len(ld))
    v = 0
    for i in reversed(range(width)):
        d = bar(ld[i], p) if i in q else ld[i]
        if i in lambdas:
            d += 1
        v = v * p + d
    return v


def q_set(lambdas: tuple[int, ...], l: int, p) -> QSet:
    """Q(sigma) for an admissible tuple, validating admissibility for l."""
    if not tuple_admissible(lambdas, l, p):
        raise ValueError(f"{lambdas} is not admissible for l={l}, p={p}")
    return QSet.from_lambdas(lambdas)


def reflection(lam: int, l: int, p) -> int:
    """s_lam(l) = l + 2k where k is the defect of l below the next
    multiple of p^lam."""
    p = Prime(p)
    if lam < 1:
        raise ValueError(f"reflection level must be >= 1, got {lam}")
    if l < 1:
        raise ValueError(f"reflection base must be >= 1, got {l}")
    return l + 2 * ((-l) % p**lam)


def reflection_admissible(lam: int, l: int, p) -> bool:
    """Digit test: the reflection moves l (lam exceeds the valuation) and
    the digit at lam is not p-1."""
    p = Prime(p)
    if lam < 1:
        raise ValueError(f"reflection level must be >= 1, got {lam}")
    if l < 1:
        raise ValueError(f"reflection base must be >= 1, got {l}")
    return lam > lp(l, p) and digit(l, lam, p) != p - 1


def _check_weyl_args(n: int, l: int) -> None:
    if n < 0:
        raise ValueError(f"rank must be >= 0, got {n}")
    if not 1 <= l <= n + 1:
        raise ValueError(f"pi-index must lie in [1, {n + 1}], got {l}")


@lru_cache(maxsize=None)
def _factors_lucas(n: int, l: int, p: int) -> tuple[int, ...]:
    out = [l]
    for k in range(1, (n + 1 - l) // 2 + 1):
        if contains(k, l + 2 * k, p):
            out.append(l + 2 * k)
    return tuple(out)


def factors_lucas(n: int, l: int, p) -> tuple[int, ...]:
    """Sorted pi-indices of the composition factors of V_l^n, by the
    digit-containment criterion on k inside m = l + 2k."""
    p = Prime(p)
    _check_weyl_args(n, l)
    return _factors_lucas(n, l, int(p))


def factors_reflections(n: int, l: int, p) -> tuple[int, ...]:
    """Same factor set as `factors_lucas`, computed by closing l up under
    admissible reflections with strictly decreasing levels.

    Every reflection strictly increases the value, so branches are cut as
    soon as they leave [1, n + 1].
    """
    p = Prime(p)
    _check_weyl_args(n, l)
    lam_max = 1
    while p ** (lam_max + 1) <= 2 * (n + 1):
        lam_max += 1
    found = {l}

    def descend(value: int, lam_bound: int) -> None:
        for lam in range(min(lam_bound - 1, lam_max), 0, -1):
            if not reflection_admissible(lam, value, p):
                continue
            nxt = reflection(lam, value, p)
            if nxt > n + 1:
                continue
            found.add(nxt)
            descend(nxt, lam)

    descend(l, lam_max + 1)
    return tuple(sorted(found))


def tuple_of_factor(m: int, l: int, p) -> AdmissibleTuple:
    """The unique admissible tuple sigma with l^sigma = m.

    Scans the digits of k = (m - l) / 2 against those of m from the bottom,
    alternating between positions where the digits agree and are nonzero
    and positions where they first disagree again; read in reverse, those
    marks are the tuple entries.
    """
    p = Prime(p)
    if l < 1:
        raise ValueError(f"base pi-index must be >= 1, got {l}")
    if m == l:
        return AdmissibleTuple((), l, p)
    if m < l or (m - l) % 2:
        raise ValueError(f"{m} is not of the form l + 2k for l={l}")
    k = (m - l) // 2
    if not contains(k, m, p):
        raise ValueError(f"{m} is not a factor above l={l} for p={p}")
    kd = to_digits(k, p)
    md = to_digits(m, p)
    taus: list[int] = []
    i = 0
    while True:
        while i < len(kd) and not (kd[i] and kd[i] == md[i]):
            i += 1
        if i >= len(kd):
            break
        taus.append(i)
        while kd[i] == md[i]:
            i += 1
        taus.append(i)
    return AdmissibleTuple(tuple(reversed(taus)), l, p)


def _cmp_desc(a: list[int], b: list[int], lo: int, hi: int) -> int:
    """Compare digit slices a[lo..hi] vs b[lo..hi] as values (top first)."""
    for i in range(hi, lo - 1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


def _pair_digits(ld: list[int], alpha: int, beta: int, p: int) -> list[int]:
    """Digits of l^(alpha;beta) up to position alpha, raw above."""
    t = list(ld)
    t[beta] = p - ld[beta]
    for i in range(beta + 1, alpha):
        t[i] = p - 1 - ld[i]
    t[alpha] = ld[alpha] + 1
    return t


def _free_tail(ld: list[int], below: int, p: int) -> list[int]:
    """Greedy maximal admissible tuple with all entries < below, ignoring
    any size bound. Used once the running value is strictly under n + 1."""
    tail: list[int] = []
    hi = below - 1
    while True:
        a = next(
            (
                a
                for a in range(hi, 0, -1)
                if ld[a] != p - 1 and any(ld[b] for b in range(a))
            ),
            None,
        )
        if a is None:
            return tail
        b = max(b for b in range(a) if ld[b])
        tail += [a, b]
        hi = b - 1


def sigma_max(n: int, l: int, p) -> AdmissibleTuple:
    """The admissible tuple reaching the largest factor of V_l^n.

    Works down from the top digit of n + 1, repeatedly placing the largest
    position pair (alpha; beta) that keeps the resulting value within
    n + 1, the comparison made with the digits of l below beta left raw
    (later pairs can only raise that part, and the empty completion is the
    smallest one, so validity of a pair is exactly validity of its minimal
    extension). After placing a pair, if the value so far is already
    strictly below n + 1 on the positions at or above beta, every further
    pair is unconstrained and a greedy tail finishes the tuple; if it ties
    n + 1 exactly, the search continues strictly below beta under the same
    bound. By monotonicity of the tuple order this greedy choice is the
    maximum.
    """
    p = Prime(p)
    _check_weyl_args(n, l)
    n1 = n + 1
    nd = to_digits(n1, p)
    top = len(nd) - 1
    ld_ = to_digits(l, p)
    ld = [ld_[i] for i in range(top + 1)]
    nds = [nd[i] for i in range(top + 1)]
    out: list[int] = []
    cut = top
    while cut >= 1:
        best = None
        for alpha in range(cut, 0, -1):
            if ld[alpha] == p - 1:
                continue
            for beta in range(alpha - 1, -1, -1):
                if ld[beta] == 0:
                    continue
                if _cmp_desc(_pair_digits(ld, alpha, beta, p), nds, 0, cut) <= 0:
                    best = (alpha, beta)
                    break
            if best:
                break
        if best is None:
            break
        alpha, beta = best
        out += [alpha, beta]
        t = _pair_digits(ld, alpha, beta, p)
        if _cmp_desc(t, nds, beta, cut) < 0:
            out += _free_tail(ld, beta, p)
            break
        cut = beta - 1
    return AdmissibleTuple(tuple(out), l, p)


def is_irreducible(n: int, l: int, p) -> bool:
    """Whether V_l^n is already simple.

    With n' = n + 1: true when l = n', when the valuation of l reaches the
    top digit position where l and n' differ, or when the digit pattern
    between the valuation and that position is maximally tight (digits of
    l all p-1 against zero digits of n', complement at the valuation at
    least the digit of n', and the top differing digit off by one).
    """
    p = Prime(p)
    _check_weyl_args(n, l)
    n1 = n + 1
    if l == n1:
        return True
    ld = to_digits(l, p)
    nd = to_digits(n1, p)
    v = max(i for i in range(len(nd)) if ld[i] != nd[i])
    s = lp(l, p)
    if s >= v:
        return True
    if ld[v] + 1 != nd[v]:
        return False
    if bar(ld[s], p) < nd[s]:
        return False
    return all(ld[i] == p - 1 and nd[i] == 0 for i in range(s + 1, v))


def socle_factor(n: int, l: int, p) -> int:
    """Pi-index of the socle of V_l^n: the unique smallest element of the
    factor poset, reached from l by a single position pair (t; s) with s
    the valuation of l."""
    p = Prime(p)
    _check_weyl_args(n, l)
    if is_irreducible(n, l, p):
        return l
    n1 = n + 1
    ld = to_digits(l, p)
    nd = to_digits(n1, p)
    v = max(i for i in range(len(nd)) if ld[i] != nd[i])
    s = lp(l, p)
    if ld[v] + 1 < nd[v]:
        t = v
    else:
        u = max((i for i in range(v) if bar(ld[i], p) != nd[i]), default=-1)
        if u != -1 and bar(ld[u], p) < nd[u]:
            t = v
        else:
            t = max((j for j in range(s + 1, v) if ld[j] != p - 1), default=-1)
            if t == -1:
                raise RuntimeError(
                    f"no socle position for n={n}, l={l}, p={p}; "
                    "reducibility test out of step with socle search"
                )
    return apply_tuple((t, s), l, p)


class IdealCapExceeded(RuntimeError):
    """Raised when an order-ideal enumeration grows past its cap."""


def order_ideals(elements, leq, cap: int = 10**6) -> list[frozenset]:
    """All order ideals (down-closed subsets) of a finite poset.

    `leq` is the order relation as a callable. Recursion on a maximal
    element x: the ideals avoiding x, plus x joined onto each ideal of the
    rest that already contains the strict downset of x. Raises
    IdealCapExceeded once more than `cap` ideals accumulate.
    """

    def rec(pool: list) -> list[frozenset]:
        if not pool:
            return [frozenset()]
        x = next(e for e in pool if not any(e != o and leq(e, o) for o in pool))
        rest = [e for e in pool if e != x]
        sub = rec(rest)
        down = frozenset(e for e in rest if leq(e, x))
        out = list(sub)
        for ideal in sub:
            if down <= ideal:
                out.append(ideal | {x})
                if len(out) > cap:
                    raise IdealCapExceeded(f"more than {cap} order ideals")
        return out

    return rec(list(elements))


class FactorPoset:
    """Submodule-order poset on the composition factors of V_l^n.

    Factor m lies below factor q exactly when the position set Q of q's
    tuple is contained in that of m's; l itself carries the empty set and
    sits on top, the socle carries the largest set and sits at the bottom.
    Order ideals correspond to submodules.
    """

    def __init__(self, n: int, l: int, p):
        self.p = Prime(p)
        _check_weyl_args(n, l)
        self.n = n
        self.l = l
        self.factors = factors_lucas(n, l, self.p)
        self.tuples = {m: tuple_of_factor(m, l, self.p) for m in self.factors}
        self.qsets = {m: self.tuples[m].q_set for m in self.factors}

    @property
    def top(self) -> int:
        return self.l

    def leq(self, m: int, q: int) -> bool:
        return self.qsets[q].issubset(self.qsets[m])

    def lt(self, m: int, q: int) -> bool:
        return m != q and self.leq(m, q)

    def minimum(self) -> int:
        bottoms = [
            m for m in self.factors if all(self.leq(m, q) for q in self.factors)
        ]
        if len(bottoms) != 1:
            raise RuntimeError(
                f"factor poset of V_{self.l}^{self.n} at p={self.p} has no "
                f"unique minimum: {bottoms}"
            )
        return bottoms[0]

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (m, q) with m directly below q, for Hasse output."""
        out = []
        for m in self.factors:
            for q in self.factors:
                if not self.lt(m, q):
                    continue
                if any(self.lt(m, z) and self.lt(z, q) for z in self.factors):
                    continue
                out.append((m, q))
        return out

    def order_ideals(self, cap: int = 10**6) -> list[frozenset[int]]:
        return order_ideals(self.factors, self.leq, cap=cap)

    def submodule_count(self, cap: int = 10**6) -> int:
        return len(self.order_ideals(cap=cap))


def submodule_ideals(n: int, l: int, p, cap: int = 10**6) -> list[frozenset[int]]:
    """Order ideals of the factor poset of V_l^n, i.e. its submodules,
    each given by its set of factor pi-indices."""
    return FactorPoset(n, l, p).order_ideals(cap=cap)
