"""Linear vibrational modes about the rest shape.

Solves the constrained generalized symmetric eigenproblem
K phi = omega^2 M phi on the free coordinates; with the lumped (diagonal)
mass this reduces to a standard symmetric eigenproblem after a diagonal
similarity transform.
"""

import numpy as np

from .assembly import assemble

__all__ = ["modal_frequencies"]


def modal_frequencies(mesh, material, bc, k):
    """The k lowest vibration frequencies in Hz, sorted ascending.

    The stiffness is assembled in the rest configuration; ``bc`` selects
    the clamped vertices (positions are ignored, the rest shape is used).
    """
    sys = assemble(mesh, material, positions=None, bc=bc)
    f, Kff, mff = sys.reduced()
    if k > len(mff):
        raise ValueError(f"requested {k} modes but only {len(mff)} free coordinates")
    inv_sqrt_m = 1.0 / np.sqrt(mff)
    A = Kff * inv_sqrt_m[:, None] * inv_sqrt_m[None, :]
    w = np.linalg.eigvalsh(0.5 * (A + A.T))
    w = np.maximum(w[:k], 0.0)
    return np.sqrt(w) / (2.0 * np.pi)
