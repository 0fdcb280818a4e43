"""Deformation-gradient decomposition and PK1 stress assembly.

A deformation gradient F is factored as F = U diag(s) V^T where U and V are
proper rotations and s holds the principal stretches, sorted descending.
Keeping det(U) = det(V) = +1 pushes any reflection into the sign of the
smallest stretch, so at most one entry of s can be negative.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["RotationVariantSVD", "decompose", "assemble_pk1"]


@dataclass(frozen=True)
class RotationVariantSVD:
    """F = U diag(sigma) V^T with U, V proper rotations.

    Attributes
    ----------
    U, V : (3, 3) ndarray
        Proper rotations (determinant +1).
    sigma : (3,) ndarray
        Principal stretches, sorted descending; only sigma[2] may be
        negative.
    """

    U: np.ndarray
    V: np.ndarray
    sigma: np.ndarray

    def reconstruct(self):
        """Return U diag(sigma) V^T."""
        return (self.U * self.sigma) @ self.V.T


def decompose(F):
    """Rotation-variant SVD of a 3x3 deformation gradient.

    Computes a standard SVD and flips the sign of the last column of U
    (resp. row of V^T) together with the smallest singular value whenever
    the factor has determinant -1, so that both factors are rotations.

    Parameters
    ----------
    F : (3, 3) array_like
        Deformation gradient; finite entries, no rank requirement.

    Returns
    -------
    RotationVariantSVD
    """
    F = np.asarray(F, dtype=float)
    if F.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {F.shape}")
    if not np.all(np.isfinite(F)):
        raise ValueError("deformation gradient has non-finite entries")

    U, s, Vt = np.linalg.svd(F)
    s = s.copy()
    if np.linalg.det(U) < 0.0:
        U = U.copy()
        U[:, 2] = -U[:, 2]
        s[2] = -s[2]
    if np.linalg.det(Vt) < 0.0:
        Vt = Vt.copy()
        Vt[2, :] = -Vt[2, :]
        s[2] = -s[2]
    V = Vt.T

    # Deterministic ordering for exactly repeated singular values: among
    # equal entries, order columns lexicographically by the V column.
    for i in range(2):
        if s[i] == s[i + 1]:
            vi, vj = V[:, i], V[:, i + 1]
            for a, b in zip(vi, vj):
                if a != b:
                    if a < b:
                        U = U.copy()
                        V = V.copy()
                        U[:, [i, i + 1]] = U[:, [i + 1, i]]
                        V[:, [i, i + 1]] = V[:, [i + 1, i]]
                    break

    return RotationVariantSVD(U=U, V=V, sigma=s)


def assemble_pk1(svd, p):
    """Assemble the PK1 stress U diag(p) V^T from principal stresses.

    Parameters
    ----------
    svd : RotationVariantSVD
        Decomposition of the deformation gradient.
    p : (3,) array_like
        Principal PK1 stresses, evaluated at ``svd.sigma``.
    """
    p = np.asarray(p, dtype=float)
    return (svd.U * p) @ svd.V.T
