"""Partitions, cells, residues, hook lengths, cores and skew shapes.

Rows are numbered top-down from 1 and columns left-to-right from 1, so the
cell ``(i, j)`` sits in row ``i`` and column ``j``.  The residue of a cell
modulo ``m`` is ``(j - i) mod m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"6,2,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Length of row ``i`` (1-indexed); zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        if isinstance(cell, tuple) and len(cell) == 2 and not isinstance(cell, Partition):
            i, j = cell
            return i >= 1 and j >= 1 and self.part(i) >= j
        return super().__contains__(cell)

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Iterable[int]) -> bool:
        """True when ``other`` fits inside this diagram row by row."""
        other = tuple(other)
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def residue(cell: tuple[int, int], modulus: int) -> int:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    row, col = cell
    return (col - row) % modulus


@lru_cache(maxsize=None)
def conjugate(p: tuple[int, ...]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def hook_length(p, cell: tuple[int, int]) -> int:
    p = as_partition(p)
    i, j = cell
    if cell not in p:
        raise ValueError(f"cell {tuple(cell)} lies outside {tuple(p)}")
    return (p[i - 1] - j) + (conjugate(p)[j - 1] - i) + 1


@lru_cache(maxsize=None)
def is_core(p: tuple[int, ...], modulus: int) -> bool:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    p = as_partition(p)
    pt = conjugate(p)
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            if (row - j) + (pt[j - 1] - i) + 1 == modulus:
                return False
    return True


def removable_corners(p) -> set[Cell]:
    p = tuple(p)
    out = set()
    for i, row in enumerate(p, start=1):
        below = p[i] if i < len(p) else 0
        if row > below:
            out.add(Cell(i, row))
    return out


def addable_corners(p) -> set[Cell]:
    p = tuple(p)
    out = {Cell(len(p) + 1, 1)}
    for i, row in enumerate(p, start=1):
        above = p[i - 2] if i > 1 else None
        if above is None or above > row:
            out.add(Cell(i, row + 1))
    return out


def add_cells(p, cells: Iterable[tuple[int, int]]) -> Partition:
    """Add cells (each an addable corner of the running shape, any order per row)."""
    rows = list(p)
    for i, j in sorted(cells):
        while len(rows) < i:
            rows.append(0)
        if rows[i - 1] != j - 1:
            raise ValueError(f"cell {(i, j)} is not addable")
        rows[i - 1] = j
    return Partition(rows)


def remove_cells(p, cells: Iterable[tuple[int, int]]) -> Partition:
    rows = list(p)
    for i, j in sorted(cells, reverse=True):
        if i > len(rows) or rows[i - 1] != j:
            raise ValueError(f"cell {(i, j)} is not removable")
        rows[i - 1] = j - 1
    return Partition(rows)


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` that are not in ``inner``."""

    outer: Partition
    inner: Partition
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            Cell(i, j)
            for i, row in enumerate(self.outer, start=1)
            for j in range(self.inner.part(i) + 1, row + 1)
        )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __len__(self) -> int:
        return self.size

    def rows(self) -> list[int]:
        return sorted({c.row for c in self.cells})


def skew(outer, inner, modulus: int) -> SkewShape:
    return SkewShape(as_partition(outer), as_partition(inner), modulus)


def is_ribbon(s: SkewShape) -> bool:
    cells = s.cells
    return not any(
        (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
        for i, j in cells
    )


def is_vertical_strip(s: SkewShape) -> bool:
    rows = [c.row for c in s.cells]
    return len(rows) == len(set(rows))


def is_horizontal_strip(s: SkewShape) -> bool:
    cols = [c.col for c in s.cells]
    return len(cols) == len(set(cols))


def height(s: SkewShape) -> int:
    # Two consecutive occupied rows are joined when some column holds a cell
    # in both; non-consecutive rows never join.
    rows = s.rows()
    if not rows:
        return 0
    cols_by_row: dict[int, set[int]] = {}
    for c in s.cells:
        cols_by_row.setdefault(c.row, set()).add(c.col)
    components = 1
    for a, b in zip(rows, rows[1:]):
        if b != a + 1 or not (cols_by_row[a] & cols_by_row[b]):
            components += 1
    return len(rows) - components


def support(s: SkewShape) -> set[int]:
    return {residue(c, s.modulus) for c in s.cells}


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with parts at most ``max_part``, in reverse lex order."""
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def partitions_up_to(n: int, max_part: int | None = None) -> Iterator[Partition]:
    for size in range(n + 1):
        yield from partitions(size, max_part)


def cores(modulus: int, max_size: int) -> list[Partition]:
    return [p for p in partitions_up_to(max_size) if is_core(p, modulus)]


def residue_grid(p, modulus: int, rows: int | None = None, cols: int | None = None) -> str:
    """ASCII table of residues; cells of ``p`` are shown, the rest are dots."""
    p = as_partition(p)
    rows = rows or max(len(p), 1)
    cols = cols or max(p.part(1), 1)
    width = len(str(modulus - 1))
    label = len(str(rows))
    header = " " * (label + 3) + " ".join(f"{j:>{width}}" for j in range(1, cols + 1))
    lines = [header]
    for i in range(1, rows + 1):
        entries = [
            f"{residue((i, j), modulus):>{width}}" if (i, j) in p else "." * width
            for j in range(1, cols + 1)
        ]
        lines.append(f"{i:>{label}} | " + " ".join(entries))
    return "\n".join(lines)
