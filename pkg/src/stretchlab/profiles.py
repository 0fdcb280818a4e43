"""Closed registry of scalar profile functions.

Profiles parameterize the Hill and Valanis-Landel material families. They
ship as a named registry (rather than arbitrary callables) so config files
and the CLI can refer to them by string.

Naming scheme
-------------
``log``                log(x)                       (Hill contract)
``power:<beta>``       (x^beta - 1)/beta            (Hill contract)
``log_sq``             (1/2) log^2(x)               (well contract)
``j_minus_1_sq``       (1/2) (x - 1)^2              (well contract)
``stretch_well``       x - 1 - log(x)               (well contract)
``power_well:<beta>``  (1/2) ((x^beta - 1)/beta)^2  (well contract)
``scaled:<c>:<name>``  c * <name>

Hill contract: f(1) = 0 and f'(1) = 1.  Well (Valanis-Landel) contract:
f(1) = 0 and f'(1) = 0; all built-in well shapes have f''(1) = 1 so a
``scaled:`` wrapper directly sets the curvature at rest.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidParameterError

__all__ = ["Profile", "get_profile", "list_profiles"]

_CONTRACT_TOL = 1e-10


@dataclass(frozen=True)
class Profile:
    """A scalar map with first and second derivatives."""

    name: str
    value: Callable[[float], float] = field(repr=False)
    d1: Callable[[float], float] = field(repr=False)
    d2: Callable[[float], float] = field(repr=False)

    def check_hill(self):
        """Verify f(1) = 0, f'(1) = 1; raise otherwise."""
        if abs(self.value(1.0)) > _CONTRACT_TOL or abs(self.d1(1.0) - 1.0) > _CONTRACT_TOL:
            raise InvalidParameterError(
                f"profile '{self.name}' violates the Hill contract f(1)=0, f'(1)=1"
            )

    def check_well(self):
        """Verify f(1) = 0, f'(1) = 0; raise otherwise."""
        if abs(self.value(1.0)) > _CONTRACT_TOL or abs(self.d1(1.0)) > _CONTRACT_TOL:
            raise InvalidParameterError(
                f"profile '{self.name}' violates the well contract f(1)=0, f'(1)=0"
            )


def _log_profile():
    return Profile("log", math.log, lambda x: 1.0 / x, lambda x: -1.0 / x**2)


def _power_profile(beta):
    if beta == 0.0:
        raise InvalidParameterError("power profile exponent must be nonzero")
    return Profile(
        f"power:{beta:g}",
        lambda x: (x**beta - 1.0) / beta,
        lambda x: x ** (beta - 1.0),
        lambda x: (beta - 1.0) * x ** (beta - 2.0),
    )


def _log_sq_profile():
    return Profile(
        "log_sq",
        lambda x: 0.5 * math.log(x) ** 2,
        lambda x: math.log(x) / x,
        lambda x: (1.0 - math.log(x)) / x**2,
    )


def _j_minus_1_sq_profile():
    return Profile(
        "j_minus_1_sq",
        lambda x: 0.5 * (x - 1.0) ** 2,
        lambda x: x - 1.0,
        lambda x: 1.0,
    )


def _stretch_well_profile():
    return Profile(
        "stretch_well",
        lambda x: x - 1.0 - math.log(x),
        lambda x: 1.0 - 1.0 / x,
        lambda x: 1.0 / x**2,
    )


def _power_well_profile(beta):
    if beta == 0.0:
        raise InvalidParameterError("power_well profile exponent must be nonzero")
    base = _power_profile(beta)
    return Profile(
        f"power_well:{beta:g}",
        lambda x: 0.5 * base.value(x) ** 2,
        lambda x: base.value(x) * base.d1(x),
        lambda x: base.d1(x) ** 2 + base.value(x) * base.d2(x),
    )


def _scaled_profile(c, inner):
    return Profile(
        f"scaled:{c:.17g}:{inner.name}",
        lambda x: c * inner.value(x),
        lambda x: c * inner.d1(x),
        lambda x: c * inner.d2(x),
    )


def get_profile(name):
    """Look up a profile by its registry name.

    Parameters
    ----------
    name : str or Profile
        Registry name, e.g. ``"log"``, ``"power:0.5"`` or
        ``"scaled:2.0:log_sq"``. A Profile passes through unchanged.
    """
    if isinstance(name, Profile):
        return name
    if not isinstance(name, str):
        raise InvalidParameterError(f"profile handle must be a string, got {type(name)!r}")
    if name == "log":
        return _log_profile()
    if name == "log_sq":
        return _log_sq_profile()
    if name == "j_minus_1_sq":
        return _j_minus_1_sq_profile()
    if name == "stretch_well":
        return _stretch_well_profile()
    if name.startswith("power_well:"):
        return _power_well_profile(_parse_float(name, name.split(":", 1)[1]))
    if name.startswith("power:"):
        return _power_profile(_parse_float(name, name.split(":", 1)[1]))
    if name.startswith("scaled:"):
        parts = name.split(":", 2)
        if len(parts) != 3:
            raise InvalidParameterError(f"malformed scaled profile name '{name}'")
        return _scaled_profile(_parse_float(name, parts[1]), get_profile(parts[2]))
    raise InvalidParameterError(f"unknown profile '{name}'")


def scale_profile(c, name):
    """Return ``c *`` the named profile."""
    return _scaled_profile(float(c), get_profile(name))


def _parse_float(full, token):
    try:
        return float(token)
    except ValueError:
        raise InvalidParameterError(f"malformed profile name '{full}'") from None


def list_profiles():
    """Names of the non-parameterized registry entries plus templates."""
    return [
        "log",
        "power:<beta>",
        "log_sq",
        "j_minus_1_sq",
        "stretch_well",
        "power_well:<beta>",
        "scaled:<c>:<name>",
    ]
