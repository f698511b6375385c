"""Murnaghan-Nakayama rules for K-k-Schur and k-Schur functions."""

from .actions import (
    DOT,
    STAR,
    ZERO,
    CyclicInterval,
    Rep,
    act,
    act_bounded,
    cyclic_interval,
    cyclically_decreasing,
    cyclically_increasing,
    pieri_e,
    pieri_h,
)
from .correspondences import (
    BoundedPartition,
    Core,
    GeneratorWord,
    k_conjugate,
    p_inverse,
    p_map,
    phi,
    s_map,
    simple_on_core,
)
from .expansion import Expansion
from .hookwords import (
    Connectivity,
    HookClassification,
    HookType,
    Side,
    Tableau,
    anti_to_hook,
    classify,
    eg_insert,
    eg_tableau,
    enumerate_words,
    reading_word,
    tau,
)
from .mnrule import (
    KSetBuild,
    build_K_set,
    build_k_set,
    candidate_mus,
    generic_expand,
    k_set_build,
    mn_expand,
    oracle_expand,
)
from .shapes import Cell, Partition, SkewShape, height, skew

__version__ = "0.1.0"
