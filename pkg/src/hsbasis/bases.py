"""Orthogonal operator bases of the space of d x d complex matrices.

All built-in bases are normalized to the dimension,

    Tr(g_jk^dag g_lm) = d delta_jl delta_km ,

and enumerated by an index pair (j, k) with flat order j*d + k. Three
constructions are provided: the standard (matrix-unit) basis, the
generalized Gell-Mann basis, and the Weyl (clock/shift) basis, plus
Haar-random rotations of any of them for testing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import dagger, frob_norm, tolerance
from .report import IdentityCheck, IdentityReport

__all__ = [
    "MatrixBasis",
    "BasisSplit",
    "standard_basis",
    "gellmann_basis",
    "weyl_basis",
    "validate_basis",
    "rotated_basis",
    "split_diag_offdiag",
    "random_unitary",
    "random_basis",
]


@dataclass(frozen=True)
class MatrixBasis:
    """Ordered basis of d^2 matrices; element (j, k) sits at flat index j*d + k.

    The element stack is made read-only on construction, so instances can
    be shared freely.
    """

    d: int
    elements: np.ndarray  # shape (d*d, d, d), complex
    kind: str = "custom"

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"basis dimension must be at least 2, got {self.d}")
        el = np.array(self.elements, dtype=complex)
        if el.shape != (self.d * self.d, self.d, self.d):
            raise ValueError(
                f"basis for d={self.d} needs {self.d * self.d} elements of shape "
                f"({self.d}, {self.d}); got array of shape {el.shape}"
            )
        el.setflags(write=False)
        object.__setattr__(self, "elements", el)

    def element(self, j: int, k: int) -> np.ndarray:
        return self.elements[j * self.d + k]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class BasisSplit:
    """Flat indices of the d purely diagonal and d(d-1) purely off-diagonal elements."""

    diagonal: tuple[int, ...]
    offdiagonal: tuple[int, ...]


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")


def standard_basis(d: int) -> MatrixBasis:
    """Matrix units scaled to the dimension-d normalization: e_jk = sqrt(d) |j><k|."""
    _check_dim(d)
    el = np.zeros((d * d, d, d), dtype=complex)
    root = np.sqrt(d)
    for j in range(d):
        for k in range(d):
            el[j * d + k, j, k] = root
    return MatrixBasis(d, el, "standard")


def gellmann_basis(d: int) -> MatrixBasis:
    """Generalized Gell-Mann basis: Hermitian SU(d) generators plus the identity.

    Element (0,0) is the identity. For k < l, element (k,l) is the
    symmetric combination sqrt(d/2)(|k><l| + |l><k|) and element (l,k)
    the antisymmetric one sqrt(d/2)(-i|k><l| + i|l><k|); element (l,l)
    is the diagonal generator sqrt(d/(l(l+1)))(-l|l><l| + sum_{j<l} |j><j|).
    For d=2 this reproduces the Pauli matrices in the order
    (identity, sigma_x, sigma_y, sigma_z).
    """
    _check_dim(d)
    el = np.zeros((d * d, d, d), dtype=complex)
    el[0] = np.eye(d)
    half = np.sqrt(d / 2.0)
    for l in range(1, d):
        for k in range(l):
            x = np.zeros((d, d), dtype=complex)
            x[k, l] = half
            x[l, k] = half
            el[k * d + l] = x
            y = np.zeros((d, d), dtype=complex)
            y[k, l] = -1j * half
            y[l, k] = 1j * half
            el[l * d + k] = y
        z = np.zeros((d, d), dtype=complex)
        scale = np.sqrt(d / (l * (l + 1.0)))
        for j in range(l):
            z[j, j] = scale
        z[l, l] = -l * scale
        el[l * d + l] = z
    return MatrixBasis(d, el, "gellmann")


def weyl_basis(d: int) -> MatrixBasis:
    """Weyl operator basis D_jk = Z^j X^k omega^(-jk/2).

    Z|m> = omega^m |m> and X|m> = |m+1 mod d> with omega = exp(2 pi i/d).
    The half phase is fixed on the principal branch, omega^(1/2) = exp(pi i/d),
    which for even d is one of the two consistent choices; orthogonality does
    not depend on it. For d=2 the elements are the Pauli matrices up to this
    phase: (0,0) -> identity, (0,1) -> sigma_x, (1,0) -> sigma_z,
    (1,1) -> -i ZX = sigma_y.
    """
    _check_dim(d)
    el = np.zeros((d * d, d, d), dtype=complex)
    for j in range(d):
        for k in range(d):
            m = np.zeros((d, d), dtype=complex)
            for col in range(d):
                row = (col + k) % d
                # Z^j X^k |col> = omega^(j*row) |row>, then the -jk/2 phase.
                m[row, col] = np.exp(1j * np.pi * (2 * j * row - j * k) / d)
            el[j * d + k] = m
    return MatrixBasis(d, el, "weyl")


def validate_basis(basis: MatrixBasis) -> IdentityReport:
    """Check orthogonality: the Gram matrix must equal d times the identity.

    Reports the maximum entrywise deviation of Tr(g_p^dag g_q) from
    d*delta_pq; the verdict is pass iff it stays within tolerance(d).
    """
    n = len(basis)
    flat = basis.elements.reshape(n, -1)
    gram = flat.conj() @ flat.T
    residual = float(np.abs(gram - basis.d * np.eye(n)).max())
    tol = tolerance(basis.d)
    check = IdentityCheck(
        id="basis_gram",
        description=f"Tr(g_jk^dag g_lm) == {basis.d}*delta_jl*delta_km",
        residual=residual,
        tolerance=tol,
        passed=residual <= tol,
    )
    return IdentityReport((check,))


def rotated_basis(basis: MatrixBasis, u) -> MatrixBasis:
    """New basis h_jk = sum_lm U[jk,lm] g_lm for a unitary coefficient matrix.

    ``u`` may be a plain d^2 x d^2 array or any object with a ``coeffs``
    attribute (such as a BasisChange). Unitarity of the coefficients is
    what preserves orthogonality, so it is enforced here.
    """
    coeffs = np.asarray(getattr(u, "coeffs", u), dtype=complex)
    n = basis.d * basis.d
    if coeffs.shape != (n, n):
        raise ValueError(
            f"coefficient matrix must be {n}x{n} for d={basis.d}, got {coeffs.shape}"
        )
    residual = frob_norm(dagger(coeffs) @ coeffs - np.eye(n))
    if residual > tolerance(n):
        raise ValueError(
            f"coefficient matrix is not unitary (residual {residual:.3e})"
        )
    new = np.einsum("rq,qij->rij", coeffs, basis.elements)
    return MatrixBasis(basis.d, new, "custom")


def split_diag_offdiag(basis: MatrixBasis) -> BasisSplit | None:
    """Partition the elements into purely diagonal and purely off-diagonal ones.

    Returns None when some element mixes diagonal and off-diagonal entries
    (beyond tolerance) or the diagonal count is not d.
    """
    tol = tolerance(basis.d)
    diagonal: list[int] = []
    offdiagonal: list[int] = []
    for idx, g in enumerate(basis.elements):
        main = np.diag(g)
        off = g - np.diag(main)
        if frob_norm(off) <= tol:
            diagonal.append(idx)
        elif np.linalg.norm(main) <= tol:
            offdiagonal.append(idx)
        else:
            return None
    if len(diagonal) != basis.d:
        return None
    return BasisSplit(tuple(diagonal), tuple(offdiagonal))


def random_unitary(n: int, rng=None) -> np.ndarray:
    """Haar-distributed n x n unitary.

    QR decomposition of a complex Gaussian matrix with the R diagonal
    rephased to be positive, which makes the distribution exactly Haar.
    """
    rng = np.random.default_rng(rng)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_basis(d: int, rng=None) -> MatrixBasis:
    """Orthogonal basis obtained by a Haar-random rotation of the standard basis."""
    return rotated_basis(standard_basis(d), random_unitary(d * d, rng))
