"""One-parameter nonlinearity filter.

The filtered energy is psi_alpha(l) = psi(l^alpha) / alpha^2 for
alpha > 0. Its rest Hessian equals the base's, so the Lame parameters
(and hence the small-deformation response) are unchanged, while the
large-deformation response softens for alpha < 1 and stiffens for
alpha > 1. Applying it to the Linear Corotational material reproduces
the Seth-Hill family; alpha = 2 gives St. Venant-Kirchhoff.
"""

import warnings

import numpy as np

from .errors import InvalidParameterError
from .materials import MaterialModel

__all__ = ["FilteredMaterial", "filter_nonlinearity", "RECOMMENDED_ALPHA_RANGE"]

RECOMMENDED_ALPHA_RANGE = (0.2, 4.0)


class FilteredMaterial(MaterialModel):
    """A base material with the nonlinearity exponent applied.

    The domain is strictly positive stretches regardless of the base,
    since l^alpha is undefined for negative l and non-integer alpha;
    evaluation at l_i <= 0 is a hard error.
    """

    domain = "positive"

    def __init__(self, base, alpha):
        alpha = float(alpha)
        if alpha <= 0.0:
            raise InvalidParameterError(f"filter exponent must be positive, got {alpha}")
        lo, hi = RECOMMENDED_ALPHA_RANGE
        if not lo <= alpha <= hi:
            warnings.warn(
                f"filter exponent {alpha} outside the recommended range [{lo}, {hi}]",
                stacklevel=3,
            )
        self.base = base
        self.alpha = alpha
        self.family = f"filtered:{base.family}"
        super().__init__({"alpha": alpha})

    def _modulus_scale(self):
        return self.base.modulus_scale

    def _energy(self, s):
        return self.base.energy(s**self.alpha) / self.alpha**2

    def _gradient(self, s):
        a = self.alpha
        return s ** (a - 1.0) * self.base.gradient(s**a) / a

    def _hessian(self, s):
        a = self.alpha
        sa = s**a
        g = self.base.gradient(sa)
        H = self.base.hessian(sa)
        w = s ** (a - 1.0)
        out = H * np.outer(w, w)
        out[np.diag_indices(3)] += (a - 1.0) / a * s ** (a - 2.0) * g
        return out

    def lame_closed_form(self):
        # the filter preserves the rest Hessian only when the rest
        # gradient vanishes; otherwise fall back to the analytic Hessian
        if self.base.rest_stable:
            return self.base.lame_closed_form()
        return None


def filter_nonlinearity(base, alpha):
    """Wrap a material with the nonlinearity exponent alpha > 0."""
    return FilteredMaterial(base, alpha)
