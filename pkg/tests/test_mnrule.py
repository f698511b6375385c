import pytest

from kmn.actions import DOT, STAR, ZERO, act_bounded_parts, pieri_h
from kmn.correspondences import BoundedPartition, GeneratorWord, bounded_partitions
from kmn.expansion import Expansion
from kmn.hookwords import Connectivity, HookType, classify, hook_word_census
from kmn.mnrule import (
    build_K_set,
    build_k_set,
    candidate_conditions,
    candidate_mus,
    census_weight,
    enumeration_expand,
    generic_expand,
    hook_words_to,
    is_k_connected,
    k_schur_sign,
    k_set_build,
    mn_expand,
    oracle_expand,
    power_sum_terms,
    raw_power_sum_terms,
)
from kmn.shapes import Partition, height, skew

LAM = (4, 2, 1, 1)
MU_K = (4, 2, 2, 1, 1, 1)
MU_S = (4, 2, 2, 2, 2)


def W(text, k=4):
    return GeneratorWord.parse(text, k)


def test_power_sum_r1():
    p1 = power_sum_terms(4, 1)
    assert dict(p1.items()) == {W(str(a)): 1 for a in range(5)}


def test_power_sum_r4_weights():
    p4 = power_sum_terms(4, 4)
    assert p4[W("0412")] == 1
    assert p4[W("1041")] == -1
    assert p4[W("0441")] == 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_power_sum_cancels_raw_sum(k):
    for r in range(1, k + 1):
        cancelled = power_sum_terms(k, r)
        raw = raw_power_sum_terms(k, r)
        for lam in bounded_partitions(k, 6):
            for rep in (STAR, DOT):
                assert cancelled.act(lam.parts, rep) == raw.act(lam.parts, rep)


def test_power_sum_words_are_hook_words():
    for k in range(1, 5):
        for r in range(1, k + 1):
            for w, _ in power_sum_terms(k, r).items():
                assert len(w) == r and classify(w).is_hook


def test_domain_errors():
    with pytest.raises(ValueError):
        mn_expand(3, 4, (), "K")
    with pytest.raises(ValueError):
        mn_expand(3, 0, (), "S")
    with pytest.raises(ValueError):
        mn_expand(3, 1, (), "X")
    with pytest.raises(ValueError):
        oracle_expand(3, 1, (), "X")
    with pytest.raises(ValueError):
        mn_expand(3, 1, (4,), "K")
    with pytest.raises(ValueError):
        power_sum_terms(2, 3)


class TestWorkedExample:
    def test_K_coefficient(self):
        assert mn_expand(4, 4, LAM, "K")[MU_K] == -2
        assert oracle_expand(4, 4, LAM, "K")[MU_K] == -2

    def test_K_set(self):
        assert build_K_set(4, 4, LAM, MU_K) == {W("1041"), W("0441"), W("0412")}

    def test_K_set_classes(self):
        got = {str(w): (classify(w).hook_type, classify(w).asc, classify(w).weak_connected)
               for w in build_K_set(4, 4, LAM, MU_K)}
        assert got == {
            "1,0,4,1": (HookType.V, 1, True),
            "0,4,4,1": (HookType.U, 1, True),
            "0,4,1,2": (HookType.V, 2, True),
        }

    def test_K_build_intermediates(self):
        build = k_set_build(4, 4, LAM, MU_K)
        assert build.words == {W("1041"), W("0441"), W("0412")}
        assert build.branches

    def test_S_coefficient(self):
        s = mn_expand(4, 4, LAM, "S")
        assert s[MU_S] == 1
        assert MU_K not in s.terms
        assert build_k_set(4, 4, LAM, MU_K) == set()
        assert build_k_set(4, 4, LAM, MU_S) == {W("2134")}

    def test_candidates(self):
        assert Partition(MU_K) in candidate_mus(4, 4, LAM, "K")
        assert Partition(MU_S) in candidate_mus(4, 4, LAM, "S")
        assert Partition(MU_K) not in candidate_mus(4, 4, LAM, "S")
        assert not candidate_conditions(4, 4, LAM, MU_K, "S")["4"]


@pytest.mark.parametrize("variant", ["K", "S"])
def test_unit(variant):
    for k in range(1, 5):
        assert mn_expand(k, 1, (), variant).terms == {Partition((1,)): 1}


def test_r1_is_h1():
    for k in range(1, 4):
        for lam in bounded_partitions(k, 5):
            assert oracle_expand(k, 1, lam, "S").terms == pieri_h(1, lam, DOT).terms


def test_is_k_connected():
    assert is_k_connected({0, 1, 4}, 4)
    assert not is_k_connected({0, 2}, 4)
    assert not is_k_connected(set(range(5)), 4)
    assert is_k_connected(set(), 4)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rule_matches_oracle(k):
    for lam in bounded_partitions(k, 5):
        for r in range(1, k + 1):
            for v in ("K", "S"):
                assert mn_expand(k, r, lam, v).same_terms(oracle_expand(k, r, lam, v))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sets_match_brute_force(k):
    for lam in bounded_partitions(k, 6):
        for r in range(1, k + 1):
            for mu in candidate_mus(k, r, lam, "K"):
                assert build_K_set(k, r, lam, mu) == hook_words_to(k, r, lam, mu, STAR)
            for mu in candidate_mus(k, r, lam, "S"):
                ws = build_k_set(k, r, lam, mu)
                assert ws == hook_words_to(k, r, lam, mu, DOT)
                assert len(ws) <= 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_filters_have_no_false_negatives(k):
    for lam in bounded_partitions(k, 6):
        for r in range(1, k + 1):
            for v in ("K", "S"):
                assert set(oracle_expand(k, r, lam, v).terms) <= candidate_mus(k, r, lam, v)
            # no hook word reaches a partition outside the K candidates
            reached = {mu for mu in enumeration_expand(k, r, lam, STAR, lambda *a: 1).terms}
            assert reached <= candidate_mus(k, r, lam, "K")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_key_sizes(k):
    for lam in bounded_partitions(k, 5):
        for r in range(1, k + 1):
            for mu in mn_expand(k, r, lam, "S").terms:
                assert mu.size == lam.size + r
            for mu in mn_expand(k, r, lam, "K").terms:
                # mu = lambda can carry a nonzero coefficient in the K case
                assert 0 <= mu.size - lam.size <= r
                assert mu.contains(lam.parts)


def test_K_allows_lambda_itself():
    assert mn_expand(1, 1, (1,), "K")[(1,)] == -1
    assert oracle_expand(1, 1, (1,), "K")[(1,)] == -1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_height_bound(k):
    for lam in bounded_partitions(k, 5):
        for r in range(1, k + 1):
            for mu in candidate_mus(k, r, lam, "K"):
                ht = height(skew(mu, lam.parts, k + 1))
                for u in build_K_set(k, r, lam, mu):
                    assert ht <= classify(u).asc
            for mu in candidate_mus(k, r, lam, "S"):
                ht = height(skew(mu, lam.parts, k + 1))
                for u in build_k_set(k, r, lam, mu):
                    assert classify(u).asc == ht


@pytest.mark.parametrize("k", [2, 3, 4])
def test_degeneration(k):
    for lam in bounded_partitions(k, 5):
        for r in range(1, k + 1):
            s = mn_expand(k, r, lam, "S")
            for mu in candidate_mus(k, r, lam, "S"):
                # only connected V words contribute under DOT
                words = hook_words_to(k, r, lam, mu, DOT)
                restricted = sum(
                    (-1) ** classify(u).asc
                    for u in words
                    if classify(u).hook_type is HookType.V and classify(u).connectivity is Connectivity.C
                )
                assert s[mu] == restricted == census_weight(words, r)
                if words:
                    ht = height(skew(mu, lam.parts, k + 1))
                    assert len(words) == 1 and s[mu] == (-1) ** ht


def test_generic_specialisations():
    k = 3
    for lam in bounded_partitions(k, 4):
        for r in range(1, k + 1):
            K = generic_expand(k, r, lam, STAR, lambda r, mu, lam: k_schur_sign(r, lam.size, mu.size))
            assert K.same_terms(mn_expand(k, r, lam, "K"))
            S = generic_expand(k, r, lam, DOT, lambda r, mu, lam: 1)
            assert S.same_terms(mn_expand(k, r, lam, "S"))
            ones = generic_expand(k, r, lam, STAR, lambda r, mu, lam: 1)
            assert ones.same_terms(enumeration_expand(k, r, lam, STAR, lambda r, mu, lam: 1))


def test_hand_census():
    # psi-tilde = 1 under STAR for p_1 on (1) with k = 2: letters 0 fixes, 1 and 2 add
    e = generic_expand(2, 1, (1,), STAR, lambda r, mu, lam: 1)
    expected = {}
    for a in range(3):
        mu = act_bounded_parts((a,), (1,), 2, STAR)
        if mu is not ZERO:
            expected[mu] = expected.get(mu, 0) + 1
    assert e.terms == expected


def test_expansion_json_roundtrip():
    e = mn_expand(4, 4, LAM, "K")
    text = e.to_json()
    back = Expansion.from_json(text)
    assert back.same_terms(e) and back.to_json() == text
    assert back.base == LAM and back.variant == "K"


def test_expansion_add_drops_zero():
    e = Expansion(2, 1, "K", ())
    e.add((1,), 2)
    e.add((1,), -2)
    assert len(e) == 0 and e[(1,)] == 0
