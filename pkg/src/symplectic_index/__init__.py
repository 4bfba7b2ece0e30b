"""Exact indexing, sampling and transvection factorization of Sp(2n, F2) and the Clifford group."""
from ._backend import available_backends, get_backend, set_backend
from .clifford import (
    CliffordElement,
    Tableau,
    clifford_order,
    clifford_to_index,
    from_tableau,
    index_to_clifford,
    make_rng,
    sample_clifford,
    sample_symplectic,
    to_tableau,
)
from .gf2 import (
    BitVec,
    DimensionError,
    NotSymplecticError,
    SympMatrix,
    direct_sum_embed,
    is_symplectic,
    mat_mul,
    mat_vec,
    symplectic_inner,
)
from .indexer import (
    InvariantViolation,
    bits_to_int,
    coset_count,
    int_to_bits,
    sp_order,
    symplectic_inverse,
    symplectic_n3,
    symplectic_n4,
    transvection_factorization,
)
from .sympgs import SymplecticBasis, complete_symplectic_basis, gs_basic_step
from .transvect import (
    Transvection,
    TransvectionSeq,
    apply_seq,
    apply_seq_to_matrix,
    apply_transvection,
    find_transvection,
)

__version__ = "0.1.0"
