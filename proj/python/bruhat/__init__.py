"""Schubert polynomials and Bruhat-order combinatorics."""

from ._core import (
    DomainError,
    Permutation,
    bruhat_leq,
    census,
    chain_words,
    coloured_chain_count,
    count_chains,
    cyclic_shift,
    expand,
    f_lambda,
    grassmannian,
    interval_dot,
    is_disjoint,
    k_bruhat_leq,
    lr_coeff,
    lr_vector,
    lrc,
    product,
    psi_p,
    schubert,
    shape_equivalent,
    structure_constant,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
