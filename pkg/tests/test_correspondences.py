import pytest

from kmn.correspondences import (
    BoundedPartition,
    Core,
    GeneratorWord,
    bounded_partitions,
    grassmannian_length,
    k_conjugate,
    p_inverse,
    p_map,
    phi,
    s_map,
    simple_on_core,
)
from kmn.shapes import conjugate, cores

LAM = BoundedPartition(4, (4, 2, 1, 1))
MU = BoundedPartition(4, (4, 2, 2, 1, 1, 1))


def W(text, k=4):
    return GeneratorWord.parse(text, k)


class TestGeneratorWord:
    def test_parse_forms(self):
        assert W("2,3,0,4") == W("2304") == GeneratorWord(4, (2, 3, 0, 4))
        assert W("") == GeneratorWord(4)
        assert str(W("2304")) == "2,3,0,4"

    def test_compact_only_small_k(self):
        assert GeneratorWord.parse("10", 12).letters == (10,)
        assert GeneratorWord.parse("1,0", 12).letters == (1, 0)

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            W("5")
        with pytest.raises(ValueError):
            W("1,a")
        with pytest.raises(ValueError):
            GeneratorWord(0, ())

    def test_concat_and_support(self):
        u = W("10") + W("41")
        assert u == W("1041")
        assert u.support == {0, 1, 4}
        assert u.weak_length == len(u) == 4
        with pytest.raises(ValueError):
            W("1") + GeneratorWord(3, (1,))


def test_bounded_validation():
    with pytest.raises(ValueError):
        BoundedPartition(3, (4,))
    assert BoundedPartition.parse("4,2,1,1", 4) == LAM


def test_core_validation():
    with pytest.raises(ValueError):
        Core((5,), 5)
    assert Core((6, 2, 1, 1), 5).k == 4


def test_phi():
    assert str(phi(LAM)) == "2,3,0,4,3,2,1,0"
    assert phi(BoundedPartition(4)) == GeneratorWord(4)
    assert phi(BoundedPartition(1, (1,))).letters == (0,)


def test_simple_on_core():
    kappa = Core((6, 2, 1, 1), 5)
    assert simple_on_core(1, kappa).parts == (7, 3, 1, 1, 1)
    assert simple_on_core(3, Core((), 5)).parts == ()
    assert simple_on_core(0, Core((), 5)).parts == (1,)
    with pytest.raises(ValueError):
        simple_on_core(5, kappa)


def test_simple_reflections_are_involutions():
    for m in range(2, 6):
        for p in cores(m, 12):
            for i in range(m):
                c = Core(p, m)
                assert simple_on_core(i, simple_on_core(i, c)) == c


def test_s_map():
    assert s_map(W("23043210")).parts == (6, 2, 1, 1)
    assert s_map(GeneratorWord(4)).parts == ()
    assert s_map(W("0")).parts == (1,)


def test_p_map_and_inverse():
    assert p_map(Core((6, 2, 1, 1), 5)) == LAM
    assert p_map(Core((), 5)).parts == ()
    assert p_map(Core((7, 3, 3, 1, 1, 1), 5)) == MU
    assert p_inverse(LAM).parts == (6, 2, 1, 1)
    assert p_inverse(MU).parts == (7, 3, 3, 1, 1, 1)
    assert p_inverse(BoundedPartition(4)).parts == ()


def test_k_conjugate():
    assert k_conjugate(LAM).parts == (3, 1, 1, 1, 1, 1)
    assert k_conjugate(MU).parts == (3, 2, 2, 1, 1, 1, 1)
    assert k_conjugate(BoundedPartition(4)).parts == ()


def test_grassmannian_length():
    assert grassmannian_length(LAM) == 8
    assert grassmannian_length(BoundedPartition(4)) == 0
    assert grassmannian_length(MU) == 11


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_roundtrips(k):
    seen = set()
    for lam in bounded_partitions(k, 10):
        word = phi(lam)
        core = s_map(word)
        assert p_map(core) == lam
        assert len(word) == lam.size
        kc = k_conjugate(lam)
        assert k_conjugate(kc) == lam
        assert kc.size == lam.size
        seen.add(core.parts)
    # p_inverse is injective onto cores
    assert len(seen) == sum(1 for _ in bounded_partitions(k, 10))


def test_k_conjugate_large_k_is_conjugate():
    # once k exceeds every hook length, k-conjugation is ordinary conjugation
    for lam in bounded_partitions(4, 4):
        big = BoundedPartition(9, lam.parts)
        assert k_conjugate(big).parts == conjugate(lam.parts)
