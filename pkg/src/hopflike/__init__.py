"""Composition-category kernel over exact symmetric functions."""

from .compositions import (
    Composition,
    blocks,
    canonicalize,
    common_coarsenings,
    enumerate_compositions,
    refines,
)
from .simplicial import MonotoneMap, degeneracy, face, verify_simplicial_identities
from .contingency import (
    ContingencyMatrix,
    Permutation,
    block_decompose,
    count_matrices,
    enumerate_matrices,
    kappa,
    sigma_K,
)
from .category import (
    Merge,
    MorphismWord,
    RelationInstance,
    Shuffle,
    Split,
    apply_generator,
    compose,
    enumerate_relation_instances,
    gamma_of,
    merge_chain,
    parse_word,
    print_word,
    semantic_equal,
    split_chain,
)
from .symfunc import (
    DirectSumElement,
    PshRealization,
    SymElement,
    TensorElement,
    big_coproduct,
    big_product,
    default_realization,
    h_comult,
    h_mult,
    h_to_m,
    hall_inner,
    m_to_h,
    partitions_of,
    schur,
    transition_cache,
)
from .hopfverify import (
    check_bidegree12,
    check_hopf_compat,
    check_mixed_relations,
    check_relation_family,
    check_six_cases,
    check_square_condition,
    check_worked_examples,
    explore_mixed_bidegree,
    hopf_defect_12,
    modified_mult_12,
    six_term_12,
    six_term_21,
)
from .reports import Failure, VerificationReport

__version__ = "0.1.0"
