"""Quasi-static solves and modal analysis."""

import numpy as np
import pytest

from stretchlab.errors import ConvergenceError
from stretchlab.fem import (
    BoundaryCondition,
    SolveConfig,
    generate_mesh,
    modal_frequencies,
    reaction_force,
    solve_quasistatic,
)
from stretchlab.materials import make_material

SNH = ("stable_neo_hookean", {"mu": 1.0e5, "lam": 4.0e5})


def face(mesh, axis, value):
    return np.nonzero(np.abs(mesh.vertices[:, axis] - value) < 1e-9)[0]


def clamp_both_x_faces(mesh, stretch):
    left = face(mesh, 0, 0.0)
    right = face(mesh, 0, 1.0)
    verts = np.concatenate([left, right])
    pos = mesh.vertices[verts].copy()
    pos[len(left):, 0] += stretch - 1.0
    return BoundaryCondition(vertices=verts, positions=pos), left, right


def test_rest_boundary_conditions_converge_immediately():
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, _, _ = clamp_both_x_faces(mesh, 1.0)
    result = solve_quasistatic(mesh, model, bc)
    assert result.iterations == 0
    assert np.max(np.abs(result.positions - mesh.vertices)) < 1e-12


def test_stretch_solve_equilibrium_and_reaction():
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, left, right = clamp_both_x_faces(mesh, 1.2)
    result = solve_quasistatic(mesh, model, bc)
    assert result.energy > 0.0
    # interior residual is converged
    assert result.residuals[-1] < 1e-2
    # action equals reaction across the two faces
    fl = reaction_force(result, left)
    fr = reaction_force(result, right)
    assert np.max(np.abs(fl + fr)) < 1e-6 * max(1.0, np.max(np.abs(fr)))
    # the right face is pulled outward, so it pulls back inward
    assert fr[0] < 0.0


def test_translation_invariance():
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, _, _ = clamp_both_x_faces(mesh, 1.1)
    r0 = solve_quasistatic(mesh, model, bc)
    shift = np.array([0.3, -0.2, 0.5])
    bc2 = BoundaryCondition(vertices=bc.vertices, positions=bc.positions + shift)
    r1 = solve_quasistatic(mesh, model, bc2)
    assert np.max(np.abs(r1.positions - (r0.positions + shift))) < 1e-6
    assert r1.energy == pytest.approx(r0.energy, rel=1e-6)


def test_compression_with_positive_domain_material():
    # hencky rejects inverted elements, so the line search must stay in
    # the valid region all the way to equilibrium
    mesh = generate_mesh("cube", 2)
    model = make_material("hencky", {"mu": 1.0e5, "lam": 2.0e5})
    bc, _, right = clamp_both_x_faces(mesh, 0.7)
    result = solve_quasistatic(mesh, model, bc)
    assert reaction_force(result, right)[0] > 0.0


def test_warm_start_reduces_iterations():
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, _, _ = clamp_both_x_faces(mesh, 1.3)
    cold = solve_quasistatic(mesh, model, bc)
    warm = solve_quasistatic(mesh, model, bc, x0=cold.positions)
    assert warm.iterations <= cold.iterations
    assert warm.iterations == 0


def test_convergence_error_carries_history():
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, _, _ = clamp_both_x_faces(mesh, 1.8)
    with pytest.raises(ConvergenceError) as err:
        solve_quasistatic(mesh, model, bc, config=SolveConfig(max_iters=1))
    assert len(err.value.residual_history) >= 1


def test_modal_frequencies_sorted_positive():
    mesh = generate_mesh("beam", 1)
    model = make_material(*SNH)
    bc = BoundaryCondition(vertices=face(mesh, 0, 0.0), positions=mesh.vertices[face(mesh, 0, 0.0)])
    freqs = modal_frequencies(mesh, model, bc, 6)
    assert len(freqs) == 6
    assert np.all(np.diff(freqs) >= 0.0)
    assert freqs[0] > 0.0


def test_modal_density_scaling():
    # frequencies scale as 1/sqrt(density)
    model = make_material(*SNH)
    m1 = generate_mesh("beam", 1, density=1000.0)
    m4 = generate_mesh("beam", 1, density=4000.0)
    left = face(m1, 0, 0.0)
    bc = BoundaryCondition(vertices=left, positions=m1.vertices[left])
    f1 = modal_frequencies(m1, model, bc, 5)
    f4 = modal_frequencies(m4, model, bc, 5)
    assert np.max(np.abs(f4 / f1 - 0.5)) < 1e-10


def test_modal_stiffness_scaling():
    # frequencies scale as sqrt(stiffness)
    mesh = generate_mesh("beam", 1)
    left = face(mesh, 0, 0.0)
    bc = BoundaryCondition(vertices=left, positions=mesh.vertices[left])
    a = make_material("linear_corotational", {"mu": 1.0e5, "lam": 2.0e5})
    b = make_material("linear_corotational", {"mu": 4.0e5, "lam": 8.0e5})
    fa = modal_frequencies(mesh, a, bc, 5)
    fb = modal_frequencies(mesh, b, bc, 5)
    assert np.max(np.abs(fb / fa - 2.0)) < 1e-10


def test_sliding_constraint_relaxes_reaction():
    # releasing the tangential clamp lowers the stored energy
    mesh = generate_mesh("cube", 2)
    model = make_material(*SNH)
    bc, left, right = clamp_both_x_faces(mesh, 1.2)
    hard = solve_quasistatic(mesh, model, bc)
    coords = np.zeros((len(bc.vertices), 3), dtype=bool)
    coords[:, 0] = True
    slide = BoundaryCondition(vertices=bc.vertices, positions=bc.positions, coords=coords)
    soft = solve_quasistatic(mesh, model, slide)
    assert soft.energy < hard.energy
