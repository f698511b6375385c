"""Cyclic intervals, cyclically decreasing/increasing words, and word actions on cores.

Two actions of the generators ``A_i`` on ``(k+1)``-cores are provided:

* ``STAR`` (0-Hecke): add every addable corner of residue ``i`` if there is
  one; otherwise fix the core if it has a removable corner of residue ``i``;
  otherwise the result is ``ZERO``.
* ``DOT`` (nilCoxeter): add every addable corner of residue ``i`` if there is
  one, else ``ZERO``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

from .correspondences import (
    BoundedPartition,
    Core,
    GeneratorWord,
    _p_inverse,
    _p_map,
    as_bounded,
    corners_of_residue,
    to_letters,
)
from .expansion import Expansion
from .shapes import Partition, add_cells


class Rep(enum.Enum):
    STAR = "star"
    DOT = "dot"


STAR = Rep.STAR
DOT = Rep.DOT


class _Zero:
    """The zero vector of the module; absorbs every further letter."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class CyclicInterval:
    """The linear order ``a+1 < ... < k < 0 < ... < a-1`` on ``[0, k]`` minus ``a``."""

    k: int
    missing: int

    @cached_property
    def order(self) -> tuple[int, ...]:
        m = self.k + 1
        return tuple((self.missing + t) % m for t in range(1, m))

    @cached_property
    def rank(self) -> dict[int, int]:
        return {a: t for t, a in enumerate(self.order)}

    def __contains__(self, a: int) -> bool:
        return a in self.rank

    def __len__(self) -> int:
        return self.k

    def sort(self, letters: Iterable[int], reverse: bool = False) -> tuple[int, ...]:
        return tuple(sorted(letters, key=self.rank.__getitem__, reverse=reverse))

    def __str__(self) -> str:
        return "<".join(map(str, self.order))


def cyclic_interval(S: Iterable[int], k: int) -> CyclicInterval:
    S = set(S)
    for a in range(k + 1):
        if a not in S:
            return CyclicInterval(k, a)
    raise ValueError(f"{sorted(S)} is all of [0, {k}]; no canonical cyclic interval")


def cyclically_decreasing(A: Iterable[int], k: int) -> GeneratorWord:
    A = set(A)
    if len(A) > k:
        raise ValueError(f"{sorted(A)} must be a proper subset of [0, {k}]")
    return GeneratorWord(k, cyclic_interval(A, k).sort(A, reverse=True))


def cyclically_increasing(A: Iterable[int], k: int) -> GeneratorWord:
    A = set(A)
    if len(A) > k:
        raise ValueError(f"{sorted(A)} must be a proper subset of [0, {k}]")
    return GeneratorWord(k, cyclic_interval(A, k).sort(A))


@lru_cache(maxsize=None)
def _step(i: int, p: tuple[int, ...], modulus: int, rep: Rep):
    add, rem = corners_of_residue(p, i, modulus)
    if add:
        return add_cells(p, add)
    if rep is STAR and rem:
        return Partition(p)
    return ZERO


@lru_cache(maxsize=200_000)
def act_parts(letters: tuple[int, ...], p: tuple[int, ...], modulus: int, rep: Rep):
    """Action on a bare core tuple; ``ZERO`` or a ``Partition``."""
    if not letters:
        return Partition(p)
    rest = act_parts(letters[1:], p, modulus, rep)
    if rest is ZERO:
        return ZERO
    return _step(letters[0], tuple(rest), modulus, rep)


def act(word: GeneratorWord | Iterable[int], core: Core, rep: Rep = STAR):
    letters = to_letters(word)
    if isinstance(word, GeneratorWord) and word.k + 1 != core.modulus:
        raise ValueError("word and core use different k")
    out = act_parts(letters, tuple(core.parts), core.modulus, rep)
    if out is ZERO:
        return ZERO
    return Core(out, core.modulus)


def act_bounded_parts(letters: tuple[int, ...], lam: tuple[int, ...], k: int, rep: Rep):
    out = act_parts(letters, tuple(_p_inverse(lam, k)), k + 1, rep)
    if out is ZERO:
        return ZERO
    return _p_map(tuple(out), k)


def act_bounded(word: GeneratorWord | Iterable[int], lam: BoundedPartition, rep: Rep = STAR):
    if isinstance(word, GeneratorWord) and word.k != lam.k:
        raise ValueError("word and partition use different k")
    out = act_bounded_parts(to_letters(word), tuple(lam.parts), lam.k, rep)
    if out is ZERO:
        return ZERO
    return BoundedPartition(lam.k, out)


def psi_weight(rep: Rep, weak_length: int, lam_size: int, mu_size: int) -> int:
    """The Pieri weight of a word sending ``lam`` to ``mu``."""
    if rep is DOT:
        return 1
    return -1 if (weak_length - (mu_size - lam_size)) % 2 else 1


def _pieri(r: int, lam, k: int, rep: Rep, increasing: bool) -> Expansion:
    if not 0 <= r <= k:
        raise ValueError(f"r={r} outside [0, {k}]")
    lam = as_bounded(lam, k)
    make = cyclically_increasing if increasing else cyclically_decreasing
    out = Expansion(k, r, f"{'e' if increasing else 'h'}[{rep.value}]", lam.parts)
    for A in combinations(range(k + 1), r):
        mu = act_bounded_parts(make(A, k).letters, tuple(lam.parts), k, rep)
        if mu is ZERO:
            continue
        out.add(mu, psi_weight(rep, r, lam.size, mu.size))
    return out


def pieri_h(r: int, lam: BoundedPartition, rep: Rep = STAR) -> Expansion:
    return _pieri(r, lam, lam.k, rep, increasing=False)


def pieri_e(r: int, lam: BoundedPartition, rep: Rep = STAR) -> Expansion:
    return _pieri(r, lam, lam.k, rep, increasing=True)
