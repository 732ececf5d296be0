"""SWAP, the Bell projector, the fully coherent state, and their basis expansions.

The expansions are diagonal in the basis indices for every orthogonal
basis {g_jk} normalized to the dimension:

    SWAP            = (1/d)   sum_jk g_jk (x) g_jk^dag
    |Phi+><Phi+|    = (1/d^2) sum_jk g_jk (x) g_jk^*
    d^(3/2)|+><+|   = sum_lm [sum_jk conj(U[lm,jk])] g_lm

The expansion builders only require a structurally well-formed basis;
whether the sums reproduce the target operators is exactly the content
of the identities they feed into.
"""

from __future__ import annotations

import numpy as np

from .bases import BasisSplit, MatrixBasis, split_diag_offdiag
from .transforms import to_standard

__all__ = [
    "swap_operator",
    "swap_expansion",
    "swap_diag_expansion",
    "bell_state",
    "bell_projector",
    "bell_expansion",
    "coherent_state",
    "coherent_expansion",
]


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")


def swap_operator(d: int) -> np.ndarray:
    """The d^2 x d^2 permutation exchanging the two tensor factors.

    Entry ((j,k),(l,m)) = delta_jm delta_kl; Hermitian and involutive.
    """
    _check_dim(d)
    m = np.zeros((d * d, d * d), dtype=complex)
    for j in range(d):
        for k in range(d):
            m[j * d + k, k * d + j] = 1.0
    return m


def swap_expansion(basis: MatrixBasis) -> np.ndarray:
    """(1/d) sum_jk g_jk (x) g_jk^dag, the basis-diagonal form of SWAP."""
    d = basis.d
    g = basis.elements
    gd = g.conj().transpose(0, 2, 1)
    out = np.einsum("nij,nkl->ikjl", g, gd).reshape(d * d, d * d)
    return out / d


def swap_diag_expansion(basis: MatrixBasis, split: BasisSplit | None = None) -> np.ndarray:
    """(1/d) sum over diagonal elements of g_kk (x) g_kk^dag.

    Equals sum_j |jj><jj|, the matrix-diagonal part of SWAP, whenever the
    basis admits a diagonal/off-diagonal split; raises if it does not.
    """
    if split is None:
        split = split_diag_offdiag(basis)
    if split is None:
        raise ValueError("basis has no diagonal/off-diagonal split")
    d = basis.d
    g = basis.elements[list(split.diagonal)]
    gd = g.conj().transpose(0, 2, 1)
    out = np.einsum("nij,nkl->ikjl", g, gd).reshape(d * d, d * d)
    return out / d


def bell_state(d: int) -> np.ndarray:
    """Maximally entangled state (1/sqrt(d)) sum_j |jj> as a length-d^2 vector."""
    _check_dim(d)
    v = np.zeros(d * d, dtype=complex)
    for j in range(d):
        v[j * d + j] = 1.0
    return v / np.sqrt(d)


def bell_projector(d: int) -> np.ndarray:
    """Rank-1 projector onto the maximally entangled state.

    Entries are written as 1/d directly rather than (1/sqrt(d))^2, so the
    exact relation SWAP^T2 = d |Phi+><Phi+| holds entrywise in floats.
    """
    _check_dim(d)
    m = np.zeros((d * d, d * d), dtype=complex)
    for j in range(d):
        for k in range(d):
            m[j * d + j, k * d + k] = 1.0 / d
    return m


def bell_expansion(basis: MatrixBasis) -> np.ndarray:
    """(1/d^2) sum_jk g_jk (x) g_jk^*, the basis-diagonal form of |Phi+><Phi+|."""
    d = basis.d
    g = basis.elements
    out = np.einsum("nij,nkl->ikjl", g, g.conj()).reshape(d * d, d * d)
    return out / (d * d)


def coherent_state(d: int) -> np.ndarray:
    """The fully coherent state (1/sqrt(d)) sum_j |j> as a length-d vector."""
    _check_dim(d)
    return np.full(d, 1.0 / np.sqrt(d), dtype=complex)


def coherent_expansion(basis: MatrixBasis) -> np.ndarray:
    """d^(3/2) |+><+| assembled from standard-transformation coefficients.

    The coefficient of g_lm is sum_jk conj(U[lm,jk]) with U from
    :func:`hsbasis.transforms.to_standard`; no index pair occurs twice,
    so the coefficients of U appear explicitly.
    """
    u = to_standard(basis)
    coeffs = u.coeffs.conj().sum(axis=1)
    return np.einsum("n,nij->ij", coeffs, basis.elements)
