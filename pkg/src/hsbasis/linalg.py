"""Dense complex linear algebra with explicit bipartite index conventions.

Operators are plain numpy arrays of complex doubles in C (row-major)
order. A two-party operator on H_d (x) H_d is a d^2 x d^2 matrix whose
composite row index (j, k) is flattened as j*d + k, and identically for
columns. All functions are pure: inputs are never mutated.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "tolerance",
    "scalar_tolerance",
    "dagger",
    "frob_norm",
    "tensor",
    "hs_inner",
    "partial_trace",
    "partial_transpose",
    "reshuffle",
    "vectorize",
    "devectorize",
]


def tolerance(d: int) -> float:
    """Absolute Frobenius-norm tolerance for dimension-d comparisons.

    Scales as 1e-10 * d^2 to cover the accumulated rounding of O(d^4)
    double-precision flops.
    """
    return 1e-10 * d * d


def scalar_tolerance(d: int) -> float:
    """Looser absolute tolerance for scalar sums aggregating ~d^4 terms."""
    return 1e-9 * d * d


def dagger(a: np.ndarray) -> np.ndarray:
    """Hermitian adjoint A^dag."""
    return np.asarray(a).conj().T


def frob_norm(a: np.ndarray) -> float:
    """Frobenius norm, the norm induced by the Hilbert-Schmidt inner product."""
    return float(np.linalg.norm(a))


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product A (x) B under the row-major composite index.

    (A (x) B)[(j,k),(l,m)] = A[j,l] * B[k,m] with (j,k) -> j*d2 + k.
    """
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product (A, B)_HS = Tr(A^dag B)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(
            f"shape mismatch in Hilbert-Schmidt inner product: {a.shape} vs {b.shape}"
        )
    return complex(np.vdot(a, b))


def _as_two_party(m: np.ndarray, d: int) -> np.ndarray:
    """Reshape a d^2 x d^2 matrix to the 4-index tensor T[j,k,l,m]."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (d * d, d * d):
        raise ValueError(
            f"expected a {d * d}x{d * d} matrix for local dimension {d}, got {m.shape}"
        )
    return m.reshape(d, d, d, d)


def _check_party(party: int) -> None:
    if party not in (1, 2):
        raise ValueError(f"party must be 1 or 2, got {party!r}")


def partial_trace(m: np.ndarray, party: int, d: int) -> np.ndarray:
    """Trace out one tensor factor of a two-party operator.

    Party 1 is the left factor, party 2 the right one; the result is a
    d x d matrix with the same total trace as the input.
    """
    _check_party(party)
    t = _as_two_party(m, d)
    if party == 1:
        return np.einsum("jkjm->km", t)
    return np.einsum("jklk->jl", t)


def partial_transpose(m: np.ndarray, party: int, d: int) -> np.ndarray:
    """Transpose one tensor factor by index swap.

    For party 2: B[jk,lm] -> B[jm,lk]; for party 1: B[jk,lm] -> B[lk,jm].
    Involutive.
    """
    _check_party(party)
    t = _as_two_party(m, d)
    perm = (0, 3, 2, 1) if party == 2 else (2, 1, 0, 3)
    return t.transpose(perm).reshape(d * d, d * d)


def reshuffle(m: np.ndarray, d: int) -> np.ndarray:
    """Reshuffling B[jk,lm] -> B[jl,km] of a two-party operator. Involutive."""
    t = _as_two_party(m, d)
    return t.transpose(0, 2, 1, 3).reshape(d * d, d * d)


def vectorize(a: np.ndarray) -> np.ndarray:
    """Row-major stacking: vec(|j><k|) is the unit vector at index j*d + k."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"vectorize expects a square matrix, got shape {a.shape}")
    return a.flatten()


def devectorize(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vectorize`; the length must be a perfect square."""
    v = np.asarray(v, dtype=complex).ravel()
    d = math.isqrt(v.size)
    if d * d != v.size:
        raise ValueError(f"vector of length {v.size} is not a flattened square matrix")
    return v.reshape(d, d).copy()
