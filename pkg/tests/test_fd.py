"""Finite-difference helpers: accuracy, order of convergence, validation."""

import numpy as np
import pytest

from stretchlab.fd import FDConfig, fd_gradient, fd_hessian


def cubic(s):
    s = np.asarray(s)
    return float(s[0] ** 3 + 2.0 * s[1] ** 2 * s[2] + np.sin(s[0] * s[2]))


def cubic_grad(s):
    c = np.cos(s[0] * s[2])
    return np.array(
        [3 * s[0] ** 2 + s[2] * c, 4 * s[1] * s[2], 2 * s[1] ** 2 + s[0] * c]
    )


def test_gradient_accuracy():
    rng = np.random.default_rng(0)
    cfg = FDConfig(step=1e-6)
    for _ in range(20):
        s = rng.uniform(0.5, 2.0, size=3)
        assert np.max(np.abs(fd_gradient(cubic, s, cfg) - cubic_grad(s))) < 1e-8


def test_hessian_accuracy():
    s = np.array([1.2, 0.8, 1.5])
    H = fd_hessian(cubic, s, FDConfig(step=1e-4))
    c = np.cos(s[0] * s[2])
    n = np.sin(s[0] * s[2])
    exact = np.array(
        [
            [6 * s[0] - s[2] ** 2 * n, 0.0, c - s[0] * s[2] * n],
            [0.0, 4 * s[2], 4 * s[1]],
            [c - s[0] * s[2] * n, 4 * s[1], -s[0] ** 2 * n],
        ]
    )
    assert np.max(np.abs(H - exact)) < 1e-6


def test_second_order_convergence():
    # halving the step should shrink the error by at least 3x while the
    # truncation term dominates
    s = np.array([1.1, 0.9, 1.3])
    exact = cubic_grad(s)
    errs = []
    for step in (8e-3, 4e-3, 2e-3):
        g = fd_gradient(cubic, s, FDConfig(step=step))
        errs.append(np.max(np.abs(g - exact)))
    assert errs[0] / errs[1] > 3.0
    assert errs[1] / errs[2] > 3.0


def test_step_validation():
    with pytest.raises(ValueError):
        FDConfig(step=0.5)
    with pytest.raises(ValueError):
        FDConfig(step=1e-12)
