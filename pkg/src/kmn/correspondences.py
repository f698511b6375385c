"""Words in the generators, k-bounded partitions, cores, and the maps between them.

The triangle ``bounded partition -> word -> core -> bounded partition``
composes to the identity.  Words act on cores from the right end first, so
``GeneratorWord(k, (2, 3))`` applied to a core applies letter 3 then letter 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .shapes import (
    Partition,
    add_cells,
    addable_corners,
    as_partition,
    conjugate,
    is_core,
    partitions_up_to,
    remove_cells,
    removable_corners,
    residue,
)


@dataclass(frozen=True, order=True)
class GeneratorWord:
    k: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        bad = [a for a in self.letters if not 0 <= a <= self.k]
        if bad:
            raise ValueError(f"letters {bad} outside [0, {self.k}]")

    @classmethod
    def parse(cls, text: str, k: int) -> "GeneratorWord":
        """Read ``"2,3,0,4"`` or, for ``k <= 9``, the compact ``"2304"``."""
        text = text.strip()
        if not text:
            return cls(k)
        if "," in text:
            pieces = [t.strip() for t in text.split(",")]
        elif k <= 9:
            pieces = list(text)
        else:
            pieces = [text]
        try:
            return cls(k, tuple(int(t) for t in pieces))
        except ValueError as exc:
            raise ValueError(f"malformed word {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if other.k != self.k:
            raise ValueError("cannot concatenate words with different k")
        return GeneratorWord(self.k, self.letters + other.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.letters)

    @property
    def weak_length(self) -> int:
        return len(self.letters)


@dataclass(frozen=True, order=True)
class BoundedPartition:
    k: int
    parts: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "parts", as_partition(self.parts))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.parts and self.parts[0] > self.k:
            raise ValueError(f"{tuple(self.parts)} is not {self.k}-bounded")

    @classmethod
    def parse(cls, text: str, k: int) -> "BoundedPartition":
        return cls(k, Partition.parse(text))

    @property
    def size(self) -> int:
        return self.parts.size

    def __str__(self) -> str:
        return str(self.parts)


@dataclass(frozen=True, order=True)
class Core:
    parts: Partition
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "parts", as_partition(self.parts))
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if not is_core(self.parts, self.modulus):
            raise ValueError(f"{tuple(self.parts)} is not a {self.modulus}-core")

    @property
    def k(self) -> int:
        return self.modulus - 1

    @property
    def size(self) -> int:
        return self.parts.size

    def __str__(self) -> str:
        return str(self.parts)


def corners_of_residue(p: tuple[int, ...], i: int, modulus: int):
    """Addable and removable corners of ``p`` with the given residue."""
    add = [c for c in addable_corners(p) if residue(c, modulus) == i]
    rem = [c for c in removable_corners(p) if residue(c, modulus) == i]
    return add, rem


@lru_cache(maxsize=None)
def _simple(i: int, p: tuple[int, ...], modulus: int) -> Partition:
    add, rem = corners_of_residue(p, i, modulus)
    if add:
        return add_cells(p, add)
    if rem:
        return remove_cells(p, rem)
    return as_partition(p)


def simple_on_core(i: int, core: Core) -> Core:
    if not 0 <= i < core.modulus:
        raise ValueError(f"residue {i} outside [0, {core.modulus - 1}]")
    return Core(_simple(i, tuple(core.parts), core.modulus), core.modulus)


def phi(lam: BoundedPartition) -> GeneratorWord:
    modulus = lam.k + 1
    letters = [
        residue((i, j), modulus)
        for i in range(len(lam.parts), 0, -1)
        for j in range(lam.parts[i - 1], 0, -1)
    ]
    return GeneratorWord(lam.k, tuple(letters))


def s_map(word: GeneratorWord) -> Core:
    modulus = word.k + 1
    p: tuple[int, ...] = ()
    for a in reversed(word.letters):
        p = _simple(a, p, modulus)
    return Core(Partition(p), modulus)


@lru_cache(maxsize=None)
def _p_map(p: tuple[int, ...], k: int) -> Partition:
    pt = conjugate(p)
    return Partition(
        sum(1 for j in range(1, row + 1) if (row - j) + (pt[j - 1] - i) + 1 <= k)
        for i, row in enumerate(p, start=1)
    )


def p_map(core: Core) -> BoundedPartition:
    return BoundedPartition(core.k, _p_map(tuple(core.parts), core.k))


@lru_cache(maxsize=None)
def _p_inverse(parts: tuple[int, ...], k: int) -> Partition:
    return s_map(phi(BoundedPartition(k, Partition(parts)))).parts


def p_inverse(lam: BoundedPartition) -> Core:
    return Core(_p_inverse(tuple(lam.parts), lam.k), lam.k + 1)


def k_conjugate(lam: BoundedPartition) -> BoundedPartition:
    core = p_inverse(lam)
    return p_map(Core(conjugate(core.parts), core.modulus))


def grassmannian_length(lam: BoundedPartition) -> int:
    # The Grassmannian element of a k-bounded partition has length |lambda|.
    return lam.size


def bounded_partitions(k: int, max_size: int) -> Iterator[BoundedPartition]:
    for p in partitions_up_to(max_size, max_part=k):
        yield BoundedPartition(k, p)


def as_bounded(lam, k: int) -> BoundedPartition:
    if isinstance(lam, BoundedPartition):
        if lam.k != k:
            raise ValueError(f"partition is {lam.k}-bounded data, expected k={k}")
        return lam
    return BoundedPartition(k, as_partition(lam))


def to_letters(word: GeneratorWord | Iterable[int]) -> tuple[int, ...]:
    return word.letters if isinstance(word, GeneratorWord) else tuple(word)
