"""Primes as Eisenstein and Gaussian norms, via lambda-lengths on the three-punctured sphere H/Gamma(2)."""

from .exact_core import (
    INFINITY,
    CuspClass,
    EisensteinInt,
    ExtendedRational,
    GaussianInt,
    QuadraticPoint,
    cusp_class,
    norm_eisenstein,
    norm_gaussian,
    reduce,
)
from .lambda_geometry import Arc, enumerate_incident_arcs, ford_circle, lambda_length
from .modular_group import PSI, UnimodularMatrix, apply_to_cusp, apply_to_point, compose
from .norm_solver import NormWitness, Ring, represent_eisenstein, represent_gaussian
from .triangle_orbits import (
    CanonicalTriangle,
    barycenter,
    enumerate_triangles,
    orbit_decomposition,
    psi_image,
    stabilizer_matrix,
)

__version__ = "0.1.0"
