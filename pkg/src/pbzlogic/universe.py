"""Finite universes, bit-vector object sets, and indiscernibility partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class UniverseMismatchError(ValueError):
    """Two values built over different universes were combined."""


@dataclass(frozen=True)
class Universe:
    """Ordered finite set of named objects; the index of each name is stable."""

    objects: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.objects:
            raise ValueError("a universe needs at least one object")
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("object identifiers must be unique")

    @classmethod
    def of(cls, *names: str) -> "Universe":
        return cls(tuple(names))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    @property
    def size(self) -> int:
        return len(self.objects)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown object {name!r}") from None

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self) -> Iterator[str]:
        return iter(self.objects)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def empty(self) -> "ObjectSet":
        return ObjectSet(self, 0)

    def full(self) -> "ObjectSet":
        return ObjectSet(self, self.full_mask)

    def subset(self, names: Iterable[str]) -> "ObjectSet":
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return ObjectSet(self, bits)


@dataclass(frozen=True)
class ObjectSet:
    """Subset of a universe, stored as a bit mask over object indices."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.universe.full_mask:
            raise ValueError("bit mask outside the universe range")

    def _check(self, other: "ObjectSet") -> None:
        if other.universe != self.universe:
            raise UniverseMismatchError("object sets belong to different universes")

    def __and__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.universe, self.bits & other.bits)

    def __or__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.universe, self.bits | other.bits)

    def __sub__(self, other: "ObjectSet") -> "ObjectSet":
        self._check(other)
        return ObjectSet(self.universe, self.bits & ~other.bits)

    def __invert__(self) -> "ObjectSet":
        return ObjectSet(self.universe, self.universe.full_mask & ~self.bits)

    def __le__(self, other: "ObjectSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "ObjectSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and name in self.universe and bool(
            self.bits >> self.universe.index(name) & 1
        )

    def __iter__(self) -> Iterator[str]:
        for i, name in enumerate(self.universe.objects):
            if self.bits >> i & 1:
                yield name

    def __len__(self) -> int:
        return self.bits.bit_count()

    def names(self) -> tuple[str, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"


@dataclass(frozen=True)
class KnowledgeBase:
    """A universe together with an equivalence relation stored as partition blocks."""

    universe: Universe
    blocks: tuple[ObjectSet, ...]

    def __post_init__(self) -> None:
        covered = 0
        for block in self.blocks:
            if block.universe != self.universe:
                raise UniverseMismatchError("partition block over a different universe")
            if block.bits == 0:
                raise ValueError("empty partition block")
            if covered & block.bits:
                raise ValueError("overlapping partition blocks")
            covered |= block.bits
        if covered != self.universe.full_mask:
            raise ValueError("partition blocks do not cover the universe")

    @classmethod
    def from_partition(
        cls, universe: Universe, blocks: Iterable[ObjectSet]
    ) -> "KnowledgeBase":
        return cls(universe, tuple(blocks))

    @classmethod
    def from_attributes(
        cls, universe: Universe, rows: Mapping[str, Sequence[object]]
    ) -> "KnowledgeBase":
        """Partition by exact equality of attribute vectors.

        Tokens are opaque: a missing-value token equals only itself.
        """
        missing = [name for name in universe if name not in rows]
        if missing:
            raise ValueError(f"no attribute vector for objects {missing}")
        unknown = [name for name in rows if name not in universe]
        if unknown:
            raise KeyError(f"unknown object identifiers {unknown}")
        arity = None
        groups: dict[tuple, int] = {}
        masks: list[int] = []
        for name in universe:
            vector = tuple(rows[name])
            if arity is None:
                arity = len(vector)
            elif len(vector) != arity:
                raise ValueError(
                    f"attribute vector for {name!r} has arity {len(vector)}, expected {arity}"
                )
            i = groups.setdefault(vector, len(masks))
            if i == len(masks):
                masks.append(0)
            masks[i] |= 1 << universe.index(name)
        return cls(universe, tuple(ObjectSet(universe, m) for m in masks))

    @cached_property
    def _block_of(self) -> tuple[int, ...]:
        out = [0] * self.universe.size
        for bi, block in enumerate(self.blocks):
            for i in range(self.universe.size):
                if block.bits >> i & 1:
                    out[i] = bi
        return tuple(out)

    def block_of(self, name: str) -> ObjectSet:
        """The equivalence class of the named object."""
        return self.blocks[self._block_of[self.universe.index(name)]]

    def _check(self, x: ObjectSet) -> None:
        if x.universe != self.universe:
            raise UniverseMismatchError("object set over a different universe")

    def lower_mask(self, mask: int) -> int:
        bits = 0
        for block in self.blocks:
            if block.bits & ~mask == 0:
                bits |= block.bits
        return bits

    def upper_mask(self, mask: int) -> int:
        bits = 0
        for block in self.blocks:
            if block.bits & mask:
                bits |= block.bits
        return bits

    def lower(self, x: ObjectSet) -> ObjectSet:
        """Objects whose whole equivalence class lies inside x."""
        self._check(x)
        return ObjectSet(self.universe, self.lower_mask(x.bits))

    def upper(self, x: ObjectSet) -> ObjectSet:
        """Objects whose equivalence class meets x."""
        self._check(x)
        return ObjectSet(self.universe, self.upper_mask(x.bits))
