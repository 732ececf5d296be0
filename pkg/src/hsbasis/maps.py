"""Basis expansions of linear maps on operators.

Covers the Bloch decomposition, the trace / identity / transposition
maps realized as two-sided basis sums, partial transposition and
reshuffling of two-party operators, general superoperators with their
Choi representation, universal state inversion, and the pure-state
concurrence it induces.

Conventions: a superoperator is stored as the d^2 x d^2 matrix acting on
row-major vectorized operators, column r being vec(L(E_r)) for the unit
matrix E_r. Complex conjugation is entrywise in the computational basis
throughout (the basis in which the antisymmetric Gell-Mann elements used
for state inversion are defined).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bases import MatrixBasis, gellmann_basis
from .linalg import (
    dagger,
    devectorize,
    frob_norm,
    partial_trace,
    tensor,
    tolerance,
    vectorize,
)

__all__ = [
    "BlochVector",
    "Superoperator",
    "ChoiState",
    "bloch_decompose",
    "bloch_reconstruct",
    "trace_map",
    "identity_map",
    "transpose_map",
    "partial_transpose_map",
    "reshuffle_map",
    "superop_from_action",
    "choi_state",
    "apply_via_choi",
    "state_inversion",
    "state_inversion_y",
    "state_inversion_two",
    "concurrence_squared",
]


@dataclass(frozen=True)
class BlochVector:
    """Coefficients b_jk = Tr(g_jk^dag B) of an operator in a given basis."""

    d: int
    kind: str
    coeffs: np.ndarray  # (d*d,), complex, flat order j*d + k

    @property
    def squared_length(self) -> float:
        """(1/d) sum |b_jk|^2, which equals the purity Tr(B^dag B)."""
        return float(np.sum(np.abs(self.coeffs) ** 2)) / self.d


@dataclass(frozen=True)
class Superoperator:
    """Linear map on d x d operators as a matrix on vectorized inputs."""

    d: int
    matrix: np.ndarray  # (d*d, d*d), complex

    def apply(self, a: np.ndarray) -> np.ndarray:
        return devectorize(self.matrix @ vectorize(a))


@dataclass(frozen=True)
class ChoiState:
    """Two-party operator (L (x) Id)|Phi+><Phi+| encoding a map L."""

    d: int
    matrix: np.ndarray  # (d*d, d*d), complex


def _check_square(a: np.ndarray, d: int, what: str = "operator") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.shape != (d, d):
        raise ValueError(f"{what} must be {d}x{d}, got {a.shape}")
    return a


def bloch_decompose(a: np.ndarray, basis: MatrixBasis) -> BlochVector:
    """Bloch coefficients b_jk = Tr(g_jk^dag A)."""
    a = _check_square(a, basis.d)
    coeffs = np.einsum("nij,ij->n", basis.elements.conj(), a)
    return BlochVector(basis.d, basis.kind, coeffs)


def bloch_reconstruct(bloch, basis: MatrixBasis) -> np.ndarray:
    """Rebuild A = (1/d) sum_jk b_jk g_jk from coefficients.

    Accepts a BlochVector or a plain length-d^2 coefficient array.
    """
    coeffs = np.asarray(getattr(bloch, "coeffs", bloch), dtype=complex).ravel()
    n = basis.d * basis.d
    if coeffs.size != n:
        raise ValueError(f"expected {n} coefficients for d={basis.d}, got {coeffs.size}")
    return np.einsum("n,nij->ij", coeffs, basis.elements) / basis.d


def trace_map(a: np.ndarray, basis: MatrixBasis) -> np.ndarray:
    """(1/d) sum_lm g_lm A g_lm^dag, which equals Tr(A) 1 for any orthogonal basis."""
    a = _check_square(a, basis.d)
    g = basis.elements
    out = np.einsum("nij,jk,nlk->il", g, a, g.conj())
    return out / basis.d


def transpose_map(a: np.ndarray, basis: MatrixBasis) -> np.ndarray:
    """(1/d) sum_lm g_lm A g_lm^*, the basis expansion of the transposition."""
    a = _check_square(a, basis.d)
    g = basis.elements
    out = np.einsum("nij,jk,nkl->il", g, a, g.conj())
    return out / basis.d


def identity_map(a: np.ndarray, basis: MatrixBasis) -> np.ndarray:
    """(1/d^2) sum_jk,lm g_jk g_lm^dag A g_jk^dag g_lm, reproducing A itself."""
    a = _check_square(a, basis.d)
    g = basis.elements
    gd = g.conj().transpose(0, 2, 1)
    out = np.einsum("pij,qjk,kl,plm,qmn->in", g, gd, a, gd, g, optimize=True)
    return out / basis.d**2


def partial_transpose_map(b: np.ndarray, party: int, basis: MatrixBasis) -> np.ndarray:
    """Partial transposition of a two-party operator as a two-sided basis sum.

    Party 2: (1/d) sum (1 (x) g) B (1 (x) g^*); party 1 mirrors the
    factors. Matches the raw index swap of
    :func:`hsbasis.linalg.partial_transpose`.
    """
    if party not in (1, 2):
        raise ValueError(f"party must be 1 or 2, got {party!r}")
    d = basis.d
    b = np.asarray(b, dtype=complex)
    if b.shape != (d * d, d * d):
        raise ValueError(f"two-party operator must be {d * d}x{d * d}, got {b.shape}")
    eye = np.eye(d)
    acc = np.zeros_like(b)
    for g in basis.elements:
        if party == 2:
            acc += tensor(eye, g) @ b @ tensor(eye, g.conj())
        else:
            acc += tensor(g, eye) @ b @ tensor(g.conj(), eye)
    return acc / d


def reshuffle_map(b: np.ndarray, basis: MatrixBasis) -> np.ndarray:
    """Reshuffling as a two-sided basis sum, (1/d) sum (1 (x) g) B (g^* (x) 1).

    Matches the raw index permutation of :func:`hsbasis.linalg.reshuffle`.
    """
    d = basis.d
    b = np.asarray(b, dtype=complex)
    if b.shape != (d * d, d * d):
        raise ValueError(f"two-party operator must be {d * d}x{d * d}, got {b.shape}")
    eye = np.eye(d)
    acc = np.zeros_like(b)
    for g in basis.elements:
        acc += tensor(eye, g) @ b @ tensor(g.conj(), eye)
    return acc / d


def superop_from_action(
    action: Callable[[np.ndarray], np.ndarray], basis: MatrixBasis
) -> Superoperator:
    """Superoperator of L(A) = (1/d) sum_jk Tr(g_jk^dag A) L(g_jk).

    ``action`` gives the image of each basis element; linearity fixes the
    rest. Column r of the matrix is vec(L(E_r)) for the unit matrix E_r.
    """
    d = basis.d
    n = d * d
    images = np.stack([vectorize(action(g)) for g in basis.elements])
    # weights[q, r] = conj(g_q entries) read at flat position r = a*d + b
    weights = basis.elements.reshape(n, n).conj()
    matrix = np.einsum("qc,qr->cr", images, weights) / d
    return Superoperator(d, matrix)


def choi_state(superop: Superoperator, basis: MatrixBasis) -> ChoiState:
    """Choi representation C_L = (L (x) Id)|Phi+><Phi+| = (1/d^2) sum L(g) (x) g^*."""
    d = basis.d
    if superop.d != d:
        raise ValueError(
            f"superoperator dimension {superop.d} does not match basis dimension {d}"
        )
    images = np.stack([superop.apply(g) for g in basis.elements])
    out = np.einsum("nij,nkl->ikjl", images, basis.elements.conj()).reshape(d * d, d * d)
    return ChoiState(d, out / d**2)


def apply_via_choi(choi: ChoiState, a: np.ndarray) -> np.ndarray:
    """Recover L(A) = d Tr_2[C_L (1 (x) A^T)] from the Choi representation."""
    d = choi.d
    a = _check_square(a, d)
    return d * partial_trace(choi.matrix @ tensor(np.eye(d), a.T), 2, d)


def _check_hermitian(a: np.ndarray, tol: float, what: str) -> None:
    if frob_norm(a - dagger(a)) > tol:
        raise ValueError(f"{what} must be Hermitian within {tol:.1e}")


def state_inversion(a: np.ndarray, basis: MatrixBasis) -> np.ndarray:
    """Universal state inversion (1/d) sum g A^* (g^dag - g^*).

    Equals Tr(A) 1 - A for Hermitian A, combining the trace-map and
    transposition-map expansions.
    """
    a = _check_square(a, basis.d)
    _check_hermitian(a, tolerance(basis.d), "state-inversion input")
    g = basis.elements
    gd_minus_gc = g.conj().transpose(0, 2, 1) - g.conj()
    out = np.einsum("nij,jk,nkl->il", g, a.conj(), gd_minus_gc)
    return out / basis.d


def _y_elements(d: int) -> np.ndarray:
    """The antisymmetric (purely imaginary) Gell-Mann elements y_jk, j < k."""
    b = gellmann_basis(d)
    return np.stack([b.element(l, k) for k in range(d) for l in range(k + 1, d)])


def state_inversion_y(a: np.ndarray) -> np.ndarray:
    """Single-party inversion via the antisymmetric elements only.

    (2/d) sum_{j<k} y_jk A^* y_jk; the real-entry elements drop out of
    the general expansion because g^dag = g^* for them.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"state-inversion input must be square, got {a.shape}")
    d = a.shape[0]
    _check_hermitian(a, tolerance(d), "state-inversion input")
    ys = _y_elements(d)
    out = np.einsum("nij,jk,nkl->il", ys, a.conj(), ys)
    return 2.0 * out / d


def state_inversion_two(b: np.ndarray) -> np.ndarray:
    """Two-party universal state inversion.

    (4/d^2) sum_{j<k, l<m} (y_jk (x) y_lm) B^* (y_jk (x) y_lm), the
    higher-dimensional generalization of the spin-flip construction.
    Equals Tr(B) 1 - Tr_2(B) (x) 1 - 1 (x) Tr_1(B) + B for Hermitian B.
    """
    b = np.asarray(b, dtype=complex)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"two-party operator must be square, got {b.shape}")
    d = math.isqrt(b.shape[0])
    if d * d != b.shape[0] or d < 2:
        raise ValueError(
            f"two-party operator size {b.shape[0]} is not d^2 for a local dimension d >= 2"
        )
    _check_hermitian(b, tolerance(d * d), "state-inversion input")
    ys = _y_elements(d)
    bc = b.conj()
    acc = np.zeros_like(b)
    for yl in ys:
        for yr in ys:
            yy = tensor(yl, yr)
            acc += yy @ bc @ yy
    return 4.0 * acc / d**2


def concurrence_squared(psi: np.ndarray) -> float:
    """Squared concurrence Tr[|psi><psi| S(|psi><psi|)] of a pure two-party state.

    ``psi`` is a unit vector of length d^2. The value also equals
    (4/d^2) sum_{j<k, l<m} |<psi| y_jk (x) y_lm |psi^*>|^2 and ranges
    from 0 (product states) to 2(1 - 1/d) (maximally entangled states).
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    d = math.isqrt(psi.size)
    if d * d != psi.size or d < 2:
        raise ValueError(
            f"state vector length {psi.size} is not d^2 for a local dimension d >= 2"
        )
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > tolerance(d):
        raise ValueError(f"state vector must be normalized, got norm {norm!r}")
    projector = np.outer(psi, psi.conj())
    inverted = state_inversion_two(projector)
    value = float(np.vdot(psi, inverted @ psi).real)
    # rounding can push an exact zero marginally negative
    return max(value, 0.0)
