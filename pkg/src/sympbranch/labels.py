"""Labels for fundamental weights and simple modules, in both indexings.

Two coordinate systems are in play for rank n: omega labels index the
fundamental weights 0..n directly, pi labels count from the other end,
with pi_m corresponding to omega_{n+1-m}. The pi convention makes the
branching and factor formulas uniform (indices behave additively), while
the omega convention is the one users think in, so both are first class
and conversion is explicit.

Out-of-range indices denote the zero module. Multisets silently drop
them, which keeps formula code free of boundary cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True, order=True)
class OmegaLabel:
    """omega_index at rank `rank`; zero unless 0 <= index <= rank."""

    index: int
    rank: int

    @property
    def is_zero(self) -> bool:
        return not 0 <= self.index <= self.rank

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def to_pi(self) -> "PiLabel":
        return PiLabel(self.rank + 1 - self.index, self.rank)

    def to_omega(self) -> "OmegaLabel":
        return self

    def json_obj(self) -> dict:
        return {"coords": "omega", "n": self.rank, "index": self.index}

    def __str__(self) -> str:
        return f"ω_{self.index}"


@dataclass(frozen=True, order=True)
class PiLabel:
    """pi_index at rank `rank`; zero unless 1 <= index <= rank + 1."""

    index: int
    rank: int

    @property
    def is_zero(self) -> bool:
        return not 1 <= self.index <= self.rank + 1

    @property
    def is_trivial(self) -> bool:
        return self.index == self.rank + 1

    def to_omega(self) -> OmegaLabel:
        return OmegaLabel(self.rank + 1 - self.index, self.rank)

    def to_pi(self) -> "PiLabel":
        return self

    def json_obj(self) -> dict:
        return {"coords": "pi", "n": self.rank, "index": self.index}

    def __str__(self) -> str:
        return f"π_{self.index}"


Label = OmegaLabel | PiLabel


class LabelMultiset:
    """Multiset of labels at a single rank and in a single convention.

    Zero labels and zero multiplicities are dropped on the way in, so
    formulas may emit out-of-range terms freely. Mixing omega and pi
    labels in one multiset raises, as does mixing ranks.
    """

    def __init__(self, entries: Iterable[tuple[Label, int]] = ()):
        counts: dict[Label, int] = {}
        for label, mult in entries:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {label}")
            if mult == 0 or label.is_zero:
                continue
            counts[label] = counts.get(label, 0) + mult
        kinds = {type(label) for label in counts}
        if len(kinds) > 1:
            raise ValueError("multiset mixes omega and pi labels")
        ranks = {label.rank for label in counts}
        if len(ranks) > 1:
            raise ValueError(f"multiset mixes ranks {sorted(ranks)}")
        self._counts = counts

    @classmethod
    def from_dict(cls, counts: dict[Label, int]) -> "LabelMultiset":
        return cls(counts.items())

    def get(self, label: Label) -> int:
        return self._counts.get(label, 0)

    def items(self) -> list[tuple[Label, int]]:
        """Entries sorted by index."""
        return sorted(self._counts.items(), key=lambda kv: kv[0].index)

    def support(self) -> list[Label]:
        return [label for label, _ in self.items()]

    def total(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __add__(self, other: "LabelMultiset") -> "LabelMultiset":
        return LabelMultiset(list(self._counts.items()) + list(other._counts.items()))

    def scaled(self, c: int) -> "LabelMultiset":
        return LabelMultiset((label, c * mult) for label, mult in self._counts.items())

    def map_labels(self, f: Callable[[Label], Label]) -> "LabelMultiset":
        return LabelMultiset((f(label), mult) for label, mult in self._counts.items())

    def to_omega(self) -> "LabelMultiset":
        return self.map_labels(lambda lab: lab.to_omega())

    def to_pi(self) -> "LabelMultiset":
        return self.map_labels(lambda lab: lab.to_pi())

    def json_obj(self) -> list[dict]:
        return [
            {"label": label.json_obj(), "mult": mult} for label, mult in self.items()
        ]

    def __str__(self) -> str:
        if not self._counts:
            return "0"
        parts = []
        for label, mult in self.items():
            parts.append(str(label) if mult == 1 else f"{mult}·{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        inner = ", ".join(f"{label!r}: {mult}" for label, mult in self.items())
        return f"LabelMultiset({{{inner}}})"
