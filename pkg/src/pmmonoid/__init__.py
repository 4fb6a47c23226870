"""Small-scale models of PM-monoids: R_n as a matched pair, matrix sequences, layered partial braids and layered free-group automorphisms."""

from .combinatorics import (
    IntervalPartitionSpec,
    OrderedSetPartition,
    Permutation,
    apply_to_partition,
    compose,
    enumerate_partitions,
    enumerate_permutations,
    i_star,
    interval_partition,
    inverse,
    partition_product,
    standardize,
)
from .rmonoid import RElement, RWord, ad, enumerate_monoid, evaluate_word, generator_e, generator_s, r_product
from .matrix_pm import (
    MatrixSequenceM,
    MatrixSequenceTilde,
    PolynomialMatrixFamily,
    check_convergence,
    limit_of_family,
    projective_equal,
    realize_monomial,
    tilde_product,
    to_M,
    to_tilde,
)
from .braid_pm import (
    PartialBraid,
    PMBraid,
    braid_generator_e,
    braid_generator_s,
    braids_equal,
    partial_compose,
    pm_braid_product,
    project_to_r,
)
from .outer_action import LayeredAut, artin_action, compose_layered, equivalent

__version__ = "0.1.0"
