"""Weak hook words, the left/right cancellation map, and Edelman-Greene insertion.

All comparisons between letters are made in the canonical cyclic interval of
the word's support.  A weak hook word decreases strictly and then increases
strictly, meeting either in a single valley letter (type V) or in a doubled
valley letter (type U).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .actions import CyclicInterval, cyclic_interval
from .correspondences import GeneratorWord, to_letters


class HookType(str, enum.Enum):
    V = "V"
    U = "U"
    NOT_HOOK = "NOT_HOOK"


class Connectivity(str, enum.Enum):
    C = "c"  # k-connected
    NOT_C_WC = "notc_wc"  # not k-connected, k-weak connected
    NOT_C_NOT_WC = "notc_notwc"  # neither


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    NONE = "none"


@dataclass(frozen=True)
class HookClassification:
    hook_type: HookType
    asc: int = 0
    connectivity: Connectivity | None = None
    side: Side = Side.NONE
    u_min: int | None = None
    # positions (0-based) of the last letter of the left side and of the
    # first letter of the right side
    valley: int = 0
    right_start: int = 0

    @property
    def is_hook(self) -> bool:
        return self.hook_type is not HookType.NOT_HOOK

    @property
    def weak_connected(self) -> bool:
        return self.connectivity in (Connectivity.C, Connectivity.NOT_C_WC)

    def matches(
        self,
        hook_type: HookType | str | None = None,
        asc: int | None = None,
        con: str | Connectivity | None = None,
        side: Side | str | None = None,
    ) -> bool:
        """Filter in the vocabulary of the classification sets.

        ``con`` is one of ``"c"``, ``"notc"``, ``"wc"``, ``"notwc"``.
        """
        if not self.is_hook:
            return False
        if hook_type is not None and self.hook_type is not HookType(hook_type):
            return False
        if asc is not None and self.asc != asc:
            return False
        if con is not None:
            if isinstance(con, Connectivity):
                ok = self.connectivity is con
            elif con in _CON_FILTERS:
                ok = self.connectivity in _CON_FILTERS[con]
            else:
                raise ValueError(f"unknown connectivity filter {con!r}")
            if not ok:
                return False
        if side is not None and self.side is not Side(side):
            return False
        return True


NOT_HOOK = HookClassification(HookType.NOT_HOOK)

_CON_FILTERS = {
    "c": {Connectivity.C},
    "notc": {Connectivity.NOT_C_WC, Connectivity.NOT_C_NOT_WC},
    "wc": {Connectivity.C, Connectivity.NOT_C_WC},
    "notwc": {Connectivity.NOT_C_NOT_WC},
}


def _split(ranks: Sequence[int]) -> tuple[HookType, int, int] | None:
    """Hook type, valley position and right-side start, or None."""
    m = len(ranks)
    v = 0
    while v + 1 < m and ranks[v] > ranks[v + 1]:
        v += 1
    if v + 1 < m and ranks[v] == ranks[v + 1]:
        kind, start = HookType.U, v + 1
    else:
        kind, start = HookType.V, v
    for t in range(start, m - 1):
        if ranks[t] >= ranks[t + 1]:
            return None
    return kind, v, start


def _gap_top(support: Iterable[int], order: CyclicInterval) -> int | None:
    """Upper end of the lowest gap of the support, in the order of ``order``."""
    k = order.k
    ordered = order.sort(support)
    for a, c in zip(ordered, ordered[1:]):
        if (c - a) % (k + 1) != 1:
            return c
    return None


@lru_cache(maxsize=None)
def _classify(letters: tuple[int, ...], k: int) -> HookClassification:
    supp = set(letters)
    if len(supp) > k:
        return NOT_HOOK
    order = cyclic_interval(supp, k)
    ranks = [order.rank[a] for a in letters]
    split = _split(ranks)
    if split is None:
        return NOT_HOOK
    kind, valley, start = split
    asc = sum(1 for a, b in zip(ranks, ranks[1:]) if a < b)
    u_min = _gap_top(supp, order)
    if u_min is None:
        return HookClassification(kind, asc, Connectivity.C, Side.NONE, None, valley, start)
    positions = [t for t, a in enumerate(letters) if a == u_min]
    if len(positions) == 2:
        return HookClassification(kind, asc, Connectivity.NOT_C_WC, Side.NONE, u_min, valley, start)
    # u_min is never the valley letter (the valley is the minimum), so it
    # lies strictly inside one side.
    side = Side.LEFT if positions[0] < valley else Side.RIGHT
    return HookClassification(kind, asc, Connectivity.NOT_C_NOT_WC, side, u_min, valley, start)


def classify(word: GeneratorWord) -> HookClassification:
    if not word.letters:
        return HookClassification(HookType.V, 0, Connectivity.C)
    return _classify(word.letters, word.k)


@lru_cache(maxsize=None)
def hook_word_census(k: int, r: int) -> tuple[tuple[GeneratorWord, HookClassification], ...]:
    """Every weak hook word of length ``r`` with its classification (frozen)."""
    out = []
    for letters in product(range(k + 1), repeat=r):
        cls = _classify(letters, k)
        if cls.is_hook:
            out.append((GeneratorWord(k, letters), cls))
    return tuple(out)


def enumerate_words(
    k: int,
    r: int,
    hook_type: HookType | str | None = None,
    asc: int | None = None,
    con: str | Connectivity | None = None,
    side: Side | str | None = None,
) -> set[GeneratorWord]:
    """The classification set of weak hook words of length ``r`` matching the filter."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return {w for w, cls in hook_word_census(k, r) if cls.matches(hook_type, asc, con, side)}


def tau(word: GeneratorWord) -> GeneratorWord:
    """Move ``u_min`` across the adjacent block of smaller letters.

    A right-side ``u_min`` jumps left into the decreasing side and a
    left-side one jumps right; the letters it passes all commute with it.
    """
    cls = classify(word)
    if cls.connectivity is not Connectivity.NOT_C_NOT_WC:
        raise ValueError(f"tau needs a weak hook word that is not k-weak connected: {word}")
    order = cyclic_interval(word.support, word.k)
    rank = order.rank
    letters = list(word.letters)
    u = cls.u_min
    pos = letters.index(u)
    if cls.side is Side.RIGHT:
        q = pos
        while q > 0 and rank[letters[q - 1]] < rank[u]:
            q -= 1
        moved = letters[:q] + [u] + letters[q:pos] + letters[pos + 1:]
    else:
        q = pos
        while q + 1 < len(letters) and rank[letters[q + 1]] < rank[u]:
            q += 1
        moved = letters[:pos] + letters[pos + 1:q + 1] + [u] + letters[q + 1:]
    return GeneratorWord(word.k, tuple(moved))


# Edelman-Greene insertion -------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def _eg_insert_ranks(rows: list[list[int]], x: int) -> None:
    for row in rows:
        bigger = [t for t, y in enumerate(row) if y > x]
        if not bigger:
            row.append(x)
            return
        t = bigger[0]
        bumped = row[t]
        # x and x+1 together in the row: the row is left unchanged and x+1
        # moves on to the next row.
        if not (x in row and x + 1 in row):
            row[t] = x
        x = bumped
    rows.append([x])


def _to_ranks(letters, order: CyclicInterval | None):
    if order is None:
        return list(letters), lambda t: t
    return [order.rank[a] for a in letters], order.order.__getitem__


def eg_insert(P: Tableau, letter: int, order: CyclicInterval | None = None) -> Tableau:
    """Insert one letter; ``order=None`` means the usual order on integers."""
    flat = [a for row in P.rows for a in row] + [letter]
    ranks, back = _to_ranks(flat, order)
    it = iter(ranks)
    rows = [[next(it) for _ in row] for row in P.rows]
    _eg_insert_ranks(rows, ranks[-1])
    return Tableau(tuple(tuple(back(t) for t in row) for row in rows))


def eg_tableau(x: GeneratorWord | Sequence[int], order: CyclicInterval | None = None) -> Tableau:
    letters = to_letters(x)
    if order is None and isinstance(x, GeneratorWord) and len(x.support) <= x.k:
        order = cyclic_interval(x.support, x.k)
    ranks, back = _to_ranks(letters, order)
    rows: list[list[int]] = []
    for t in ranks:
        _eg_insert_ranks(rows, t)
    return Tableau(tuple(tuple(back(t) for t in row) for row in rows))


def reading_word(P: Tableau) -> tuple[int, ...]:
    return tuple(a for row in reversed(P.rows) for a in row)


# Anti-weak hook words -----------------------------------------------------


def anti_hook_split(word: GeneratorWord) -> tuple[int, int] | None:
    """For an anti-weak hook word: (peak position, start of decreasing side)."""
    if len(word.support) > word.k:
        return None
    rank = cyclic_interval(word.support, word.k).rank
    split = _split([-rank[a] for a in word.letters])
    if split is None:
        return None
    _, peak, start = split
    return peak, start


def is_anti_hook(word: GeneratorWord) -> bool:
    return bool(word.letters) and anti_hook_split(word) is not None


def is_reduced(word: GeneratorWord) -> bool:
    """Reducedness in the finite parabolic subgroup generated by the support.

    The generators of a proper support form a type A Dynkin path when listed
    in cyclic-interval order, so the word becomes a word in adjacent
    transpositions of ``S_{k+1}``; it is reduced iff its length equals the
    inversion count of the product.
    """
    if len(word.support) > word.k:
        raise ValueError("support must be a proper subset of [0, k]")
    if not word.letters:
        return True
    rank = cyclic_interval(word.support, word.k).rank
    perm = list(range(word.k + 1))
    for a in word.letters:
        t = rank[a]
        perm[t], perm[t + 1] = perm[t + 1], perm[t]
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return inversions == len(word.letters)


def collapse_repeats(word: GeneratorWord) -> GeneratorWord:
    """Step one of the anti-hook conversion (0-Hecke case).

    For each letter ``i`` occurring twice, in increasing cyclic order, the
    later copy jumps left over the letters greater than ``i+1`` standing
    right before it, and the resulting ``ii`` is collapsed to ``i``.  The
    jump is skipped when that block does not reach the earlier copy (some
    ``i+1`` sits between them), since the copies could not merge anyway.
    """
    rank = cyclic_interval(word.support, word.k).rank
    letters = list(word.letters)
    for c in sorted(word.support, key=rank.__getitem__):
        if letters.count(c) < 2:
            continue
        pos = max(t for t, a in enumerate(letters) if a == c)
        q = pos
        while q > 0 and rank[letters[q - 1]] > rank[c] + 1:
            q -= 1
        if q == 0 or letters[q - 1] != c:
            continue
        letters = letters[:q] + [c] + letters[q:pos] + letters[pos + 1:]
        collapsed: list[int] = []
        for a in letters:
            if a == c and collapsed and collapsed[-1] == c:
                continue
            collapsed.append(a)
        letters = collapsed
    return GeneratorWord(word.k, tuple(letters))


def anti_to_hook(x: GeneratorWord, rep=None) -> GeneratorWord:
    """A reduced hook word with the same action as the anti-weak hook word ``x``."""
    from .actions import DOT, STAR

    rep = STAR if rep is None else rep
    if not is_anti_hook(x):
        raise ValueError(f"{x} is not an anti-weak hook word")
    if rep is DOT:
        if not is_reduced(x):
            raise ValueError(f"{x} is not reduced; the nilCoxeter case needs a reduced word")
        reduced = x
    else:
        reduced = collapse_repeats(x)
    order = cyclic_interval(x.support, x.k)
    return GeneratorWord(x.k, reading_word(eg_tableau(reduced.letters, order)))


def left_side_length(word: GeneratorWord) -> int:
    """Length of the increasing part of an anti-weak hook word."""
    split = anti_hook_split(word)
    if split is None:
        raise ValueError(f"{word} is not an anti-weak hook word")
    return split[0] + 1


def right_side_length(word: GeneratorWord) -> int:
    """Length of the increasing part of a weak hook word."""
    cls = classify(word)
    if not cls.is_hook:
        raise ValueError(f"{word} is not a weak hook word")
    return len(word.letters) - cls.right_start


def hook_words(words: Iterable[GeneratorWord]) -> Iterator[tuple[GeneratorWord, HookClassification]]:
    for w in words:
        cls = classify(w)
        if cls.is_hook:
            yield w, cls
