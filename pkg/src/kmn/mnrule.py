"""Murnaghan-Nakayama expansions of power sums against K-k-Schur and k-Schur functions.

``mn_expand`` follows the cancellation-free route: for each admissible
partition ``mu`` it builds the set of weak hook words sending ``lambda`` to
``mu`` (``build_K_set`` / ``build_k_set``), classifies each word, and sums
the signed class weights.  ``oracle_expand`` instead applies the raw
expansion ``p_r = sum (-1)^(i+j) h_{r-i+j} e_{i-j}`` term by term through
the Pieri actions; it shares nothing with the rule beyond the actions
themselves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterator

from .actions import (
    DOT,
    STAR,
    ZERO,
    Rep,
    act_bounded_parts,
    act_parts,
    cyclic_interval,
    cyclically_decreasing,
    cyclically_increasing,
    psi_weight,
)
from .correspondences import (
    BoundedPartition,
    GeneratorWord,
    _p_inverse,
    _p_map,
    as_bounded,
    corners_of_residue,
)
from .expansion import Expansion
from .hookwords import (
    Connectivity,
    HookClassification,
    HookType,
    Side,
    _classify,
    hook_word_census,
)
from .shapes import (
    Partition,
    addable_corners,
    as_partition,
    conjugate,
    height,
    is_ribbon,
    remove_cells,
    removable_corners,
    residue,
    skew,
    support,
)

VARIANT_REP = {"K": STAR, "S": DOT}


def _check(k: int, r: int) -> None:
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 1 <= r <= k:
        raise ValueError(f"r={r} outside [1, {k}]")


def _subsets(items) -> Iterator[frozenset[int]]:
    items = sorted(items)
    return (frozenset(c) for c in chain.from_iterable(combinations(items, n) for n in range(len(items) + 1)))


# Power sums as signed word collections -------------------------------------


@dataclass
class SignedWordMultiset:
    """Words with integer multiplicities (signs folded in)."""

    k: int
    terms: Counter = field(default_factory=Counter)

    def add(self, word: GeneratorWord, weight: int = 1) -> None:
        self.terms[word] += weight
        if not self.terms[word]:
            del self.terms[word]

    def __getitem__(self, word: GeneratorWord) -> int:
        return self.terms.get(word, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def act(self, lam, rep: Rep) -> dict[Partition, int]:
        """Apply every word to ``lam`` and collect multiplicities per result."""
        lam = as_bounded(lam, self.k)
        out: Counter = Counter()
        for word, weight in self.terms.items():
            mu = act_bounded_parts(word.letters, tuple(lam.parts), self.k, rep)
            if mu is not ZERO:
                out[mu] += weight
        return {mu: c for mu, c in out.items() if c}


def power_sum_weight(cls: HookClassification, r: int) -> int:
    """Coefficient of a weak hook word of length ``r`` in the cancellation-free ``p_r``."""
    if not cls.is_hook:
        return 0
    if cls.hook_type is HookType.V:
        if cls.weak_connected and 0 <= cls.asc <= r - 1:
            return -1 if cls.asc % 2 else 1
        return 0
    i = cls.asc + 1  # U words of ascent i-1
    sign = -1 if i % 2 else 1
    if cls.weak_connected:
        return sign * (r - i) if 1 <= i <= r - 1 else 0
    if cls.side is Side.LEFT and 1 <= i <= r - 2:
        return sign
    return 0


def power_sum_terms(k: int, r: int) -> SignedWordMultiset:
    _check(k, r)
    out = SignedWordMultiset(k)
    for word, cls in hook_word_census(k, r):
        w = power_sum_weight(cls, r)
        if w:
            out.add(word, w)
    return out


def raw_power_sum_terms(k: int, r: int) -> SignedWordMultiset:
    """``sum_{i<r} sum_{j<=i} (-1)^(i+j) sum_{A,B} d_A i_B`` with words kept literally."""
    _check(k, r)
    out = SignedWordMultiset(k)
    for word, sign in _raw_terms(k, r):
        out.add(word, sign)
    return out


def _raw_terms(k: int, r: int) -> Iterator[tuple[GeneratorWord, int]]:
    residues = range(k + 1)
    for i in range(r):
        for j in range(i + 1):
            sign = -1 if (i + j) % 2 else 1
            for A in combinations(residues, r - i + j):
                d = cyclically_decreasing(A, k)
                for B in combinations(residues, i - j):
                    yield d + cyclically_increasing(B, k), sign


# Candidate partitions -------------------------------------------------------


def _grow(lam: Partition, k: int, max_cells: int) -> set[Partition]:
    """k-bounded partitions containing ``lam`` with at most ``max_cells`` extra cells."""
    seen = {lam}
    frontier = {lam}
    for _ in range(max_cells):
        nxt = set()
        for p in frontier:
            for i, j in addable_corners(p):
                if j <= k:
                    rows = list(p) + [0]
                    rows[i - 1] += 1
                    nxt.add(Partition(rows))
        seen |= nxt
        frontier = nxt
    return seen


def is_k_connected(residues: set[int], k: int) -> bool:
    if len(residues) > k:
        return False
    if not residues:
        return True
    order = cyclic_interval(residues, k)
    ranks = sorted(order.rank[a] for a in residues)
    return ranks[-1] - ranks[0] == len(ranks) - 1


def _k_conj(p: Partition, k: int) -> Partition:
    return _p_map(tuple(conjugate(_p_inverse(tuple(p), k))), k)


def candidate_conditions(k: int, r: int, lam, mu, variant: str) -> dict[str, bool]:
    """Each of the five admissibility conditions, evaluated separately."""
    lam = as_partition(as_bounded(lam, k).parts)
    mu = as_partition(as_bounded(mu, k).parts)
    lam_c, mu_c = _k_conj(lam, k), _k_conj(mu, k)
    contained = mu.contains(lam) and mu_c.contains(lam_c)
    out = {"0": contained}
    diff = mu.size - lam.size
    out["1"] = diff == r if variant == "S" else 0 <= diff <= r
    if not contained:
        out.update({"2": False, "3": False, "4": False})
        return out
    core_skew = skew(_p_inverse(tuple(mu), k), _p_inverse(tuple(lam), k), k + 1)
    out["2"] = is_ribbon(core_skew)
    supp = support(core_skew)
    out["3"] = is_k_connected(supp, k) or (variant == "K" and len(supp) < r)
    hts = height(skew(mu, lam, k + 1)) + height(skew(mu_c, lam_c, k + 1))
    out["4"] = hts == r - 1 if variant == "S" else hts < r
    return out


def candidate_mus(k: int, r: int, lam, variant: str) -> set[Partition]:
    _check(k, r)
    if variant not in VARIANT_REP:
        raise ValueError(f"unknown variant {variant!r}")
    lam = as_bounded(lam, k)
    return {
        mu
        for mu in _grow(lam.parts, k, r)
        if all(candidate_conditions(k, r, lam.parts, mu, variant).values())
    }


# The K-set construction -------------------------------------------------------


@dataclass
class KSetBranch:
    up_choice: frozenset[int]
    V_residues: frozenset[int]
    absorb_cell_up: frozenset
    absorb_residue_up: frozenset[int]
    absorb_up_choice: frozenset[int]
    V_word: GeneratorWord
    V_core: Partition
    H_residues: frozenset[int]
    absorb_cell_down: frozenset
    absorb_residue_down: frozenset[int]
    absorb_down_choice: frozenset[int]
    H_word: GeneratorWord
    word: GeneratorWord


@dataclass
class KSetBuild:
    """Intermediate sets of the construction, kept for inspection and tests."""

    k: int
    r: int
    lam: Partition
    mu: Partition
    kappa: Partition
    pi: Partition
    pre_must_down_cell: frozenset = frozenset()
    must_down_residue: frozenset[int] = frozenset()
    must_down_cell: frozenset = frozenset()
    pre_must_up_cell: frozenset = frozenset()
    must_up_residue: frozenset[int] = frozenset()
    must_up_cell: frozenset = frozenset()
    up_or_down_residue: frozenset[int] = frozenset()
    branches: list[KSetBranch] = field(default_factory=list)
    pruned: str | None = None

    @property
    def words(self) -> set[GeneratorWord]:
        return {b.word for b in self.branches}


def _remove_residue(p: tuple[int, ...], i: int, modulus: int) -> Partition:
    _, rem = corners_of_residue(p, i, modulus)
    return remove_cells(p, rem) if rem else as_partition(p)


def _residues(cells, modulus: int) -> frozenset[int]:
    return frozenset(residue(c, modulus) for c in cells)


def _hook_form(H: GeneratorWord, V: GeneratorWord) -> GeneratorWord:
    k = H.k
    order = cyclic_interval(set(H.letters) | set(V.letters), k)
    return GeneratorWord(k, order.sort(H.letters, reverse=True) + order.sort(V.letters))


def k_set_build(k: int, r: int, lam, mu, absorb: bool = True) -> KSetBuild:
    """Run the construction for the pair ``(lam, mu)``.

    ``absorb=False`` forces both absorb choices to be empty, which yields the
    k-Schur (nilCoxeter) set.
    """
    _check(k, r)
    m = k + 1
    lam = as_bounded(lam, k).parts
    mu = as_bounded(mu, k).parts
    kappa = _p_inverse(tuple(lam), k)
    pi = _p_inverse(tuple(mu), k)
    out = KSetBuild(k, r, lam, mu, kappa, pi)
    if not pi.contains(kappa):
        out.pruned = "core containment"
        return out
    D = skew(pi, kappa, m).cells
    supp_size = len(_residues(D, m))

    # Kk1: residues whose cell has its left neighbour in the skew shape
    out.pre_must_down_cell = frozenset(c for c in D if (c.row, c.col - 1) in D)
    out.must_down_residue = _residues(out.pre_must_down_cell, m)
    if len(out.must_down_residue) > k:
        out.pruned = "must.down.residue is everything"
        return out
    pi_down = pi
    for a in cyclically_decreasing(out.must_down_residue, k).letters:
        pi_down = _remove_residue(tuple(pi_down), a, m)
    out.must_down_cell = skew(pi, pi_down, m).cells

    # Kk2: residues whose cell has its lower neighbour in the skew shape
    out.pre_must_up_cell = frozenset(c for c in D if (c.row + 1, c.col) in D)
    out.must_up_residue = _residues(out.pre_must_up_cell, m)
    if len(out.must_up_residue) > k:
        out.pruned = "must.up.residue is everything"
        return out
    kappa_up = act_parts(cyclically_increasing(out.must_up_residue, k).letters, tuple(kappa), m, STAR)
    if kappa_up is ZERO:
        out.pruned = "must.up word kills kappa"
        return out
    out.must_up_cell = skew(kappa_up, kappa, m).cells

    # Kk3
    if not pi_down.contains(kappa_up):
        out.pruned = "must.up cells exceed pi minus must.down cells"
        return out
    out.up_or_down_residue = _residues(skew(pi_down, kappa_up, m).cells, m)
    kappa_removable = removable_corners(kappa)

    for up_choice in _subsets(out.up_or_down_residue):
        V_res = out.must_up_residue | up_choice
        if len(V_res) > k:
            continue
        kappa_V = act_parts(cyclically_increasing(V_res, k).letters, tuple(kappa), m, STAR)
        if kappa_V is ZERO or not kappa_V.contains(kappa):
            continue
        added_up = skew(kappa_V, kappa, m).cells
        # Kk3': removable corners whose right neighbour is not added by V
        absorb_cell_up = frozenset(c for c in kappa_removable if (c.row, c.col + 1) not in added_up)
        absorb_res_up = _residues(absorb_cell_up, m)
        up_options = _subsets(absorb_res_up) if absorb else [frozenset()]
        for up_abs in up_options:
            if len(up_abs) + supp_size > r:
                continue
            V_set = V_res | up_abs
            if len(V_set) > k:
                continue
            V = cyclically_increasing(V_set, k)
            V_core = act_parts(V.letters, tuple(kappa), m, STAR)
            if V_core is ZERO or not pi.contains(V_core):
                continue
            # Kk5
            rest = skew(pi, V_core, m).cells
            H_res = _residues(rest, m)
            # Kk5': removable corners whose lower neighbour is not added by H
            absorb_cell_down = frozenset(
                c for c in removable_corners(V_core) if (c.row + 1, c.col) not in rest
            )
            absorb_res_down = _residues(absorb_cell_down, m)
            down_options = _subsets(absorb_res_down) if absorb else [frozenset()]
            for down_abs in down_options:
                if len(down_abs) + len(H_res) + len(V_res) + len(up_abs) != r:
                    continue
                H_set = H_res | down_abs
                if len(H_set) > k:
                    continue
                H = cyclically_decreasing(H_set, k)
                if len(H) + len(V) != r:
                    continue
                word = _hook_form(H, V)
                # Kk6 only commutes letters, so the action must be unchanged.
                assert act_parts(word.letters, tuple(kappa), m, STAR) == act_parts(
                    H.letters + V.letters, tuple(kappa), m, STAR
                ), f"hook rewrite changed the action of {H + V}"
                out.branches.append(
                    KSetBranch(
                        up_choice, V_res, absorb_cell_up, absorb_res_up, up_abs, V, V_core,
                        H_res, absorb_cell_down, absorb_res_down, down_abs, H, word,
                    )
                )
    return out


def build_K_set(k: int, r: int, lam, mu) -> set[GeneratorWord]:
    return k_set_build(k, r, lam, mu, absorb=True).words


def build_k_set(k: int, r: int, lam, mu) -> set[GeneratorWord]:
    return k_set_build(k, r, lam, mu, absorb=False).words


def hook_words_to(k: int, r: int, lam, mu, rep: Rep) -> set[GeneratorWord]:
    """Brute force: weak hook words of length ``r`` sending ``lam`` to ``mu``."""
    lam = tuple(as_bounded(lam, k).parts)
    mu = as_partition(mu)
    return {
        w for w, _ in hook_word_census(k, r)
        if act_bounded_parts(w.letters, lam, k, rep) == mu
    }


# Expansions ------------------------------------------------------------------


def census_weight(words, r: int) -> int:
    return sum(power_sum_weight(_classify(w.letters, w.k), r) for w in words)


def k_schur_sign(r: int, lam_size: int, mu_size: int) -> int:
    return -1 if (r - mu_size + lam_size) % 2 else 1


def generic_expand(
    k: int,
    r: int,
    lam,
    rep: Rep,
    weight: Callable[[int, Partition, Partition], int],
    label: str = "GENERIC",
) -> Expansion:
    """Sum of ``weight(r, mu, lam)`` times the signed hook-word census at each ``mu``."""
    _check(k, r)
    lam = as_bounded(lam, k)
    variant = "K" if rep is STAR else "S"
    absorb = rep is STAR
    out = Expansion(k, r, label, lam.parts)
    for mu in sorted(candidate_mus(k, r, lam, variant)):
        words = k_set_build(k, r, lam, mu, absorb=absorb).words
        census = census_weight(words, r)
        if census:
            out.add(mu, weight(r, mu, lam.parts) * census)
    return out


def mn_expand(k: int, r: int, lam, variant: str) -> Expansion:
    if variant == "K":
        out = generic_expand(
            k, r, lam, STAR, lambda r, mu, lam: k_schur_sign(r, lam.size, mu.size), "K"
        )
    elif variant == "S":
        out = generic_expand(k, r, lam, DOT, lambda r, mu, lam: 1, "S")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return out


def oracle_expand(k: int, r: int, lam, variant: str) -> Expansion:
    if variant not in VARIANT_REP:
        raise ValueError(f"unknown variant {variant!r}")
    _check(k, r)
    lam = as_bounded(lam, k)
    rep = VARIANT_REP[variant]
    out = Expansion(k, r, variant, lam.parts)
    start = tuple(lam.parts)
    for word, sign in _raw_terms(k, r):
        mu = act_bounded_parts(word.letters, start, k, rep)
        if mu is ZERO:
            continue
        out.add(mu, sign * psi_weight(rep, r, lam.size, mu.size))
    return out


def enumeration_expand(
    k: int, r: int, lam, rep: Rep, weight: Callable[[int, Partition, Partition], int]
) -> Expansion:
    """The census evaluated over all weak hook words, with no candidate filter."""
    _check(k, r)
    lam = as_bounded(lam, k)
    by_mu: dict[Partition, list[GeneratorWord]] = {}
    start = tuple(lam.parts)
    for w, _ in hook_word_census(k, r):
        mu = act_bounded_parts(w.letters, start, k, rep)
        if mu is not ZERO:
            by_mu.setdefault(mu, []).append(w)
    out = Expansion(k, r, "ENUM", lam.parts)
    for mu, words in by_mu.items():
        out.add(mu, weight(r, mu, lam.parts) * census_weight(words, r))
    return out
