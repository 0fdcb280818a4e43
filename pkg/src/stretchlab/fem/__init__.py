"""Desk-scale tetrahedral FEM for material experiments."""

from .mesh import BoundaryCondition, TetMesh, generate_mesh, read_mesh, write_mesh
from .assembly import (
    SystemMatrices,
    assemble,
    element_pk1,
    element_stress_jacobian,
)
from .solver import QuasiStaticResult, SolveConfig, reaction_force, solve_quasistatic
from .modal import modal_frequencies

__all__ = [
    "TetMesh",
    "BoundaryCondition",
    "generate_mesh",
    "read_mesh",
    "write_mesh",
    "SystemMatrices",
    "assemble",
    "element_pk1",
    "element_stress_jacobian",
    "SolveConfig",
    "QuasiStaticResult",
    "solve_quasistatic",
    "reaction_force",
    "modal_frequencies",
]
