"""Hermitian lattices over imaginary quadratic fields, their trace lattices,
and the lattice-theoretic checks behind a family of uniruledness theorems
for ball quotients."""

from .conditions import (ConditionStatus, ConditionVerdict, condition_minus_one,
                         condition_minus_two)
from .hlattice import (HermLattice, TraceIntegralityError, dual_membership,
                       enumerate_herm_norm_vectors, herm_signature, tau_reflection,
                       trace_lattice)
from .isometry import IsometryWitness, is_isometric_definite, is_isometric_indef_2elem
from .qfield import FieldElem, field_data, multiplicity_a, unit_group
from .qlattice import (InvariantProfile, QuadLattice, enumerate_norm_vectors,
                       invariant_profile, sigma_reflection)

__all__ = [
    "ConditionStatus", "ConditionVerdict", "condition_minus_one", "condition_minus_two",
    "HermLattice", "TraceIntegralityError", "dual_membership", "enumerate_herm_norm_vectors",
    "herm_signature", "tau_reflection", "trace_lattice",
    "IsometryWitness", "is_isometric_definite", "is_isometric_indef_2elem",
    "FieldElem", "field_data", "multiplicity_a", "unit_group",
    "InvariantProfile", "QuadLattice", "enumerate_norm_vectors", "invariant_profile",
    "sigma_reflection",
]

__version__ = "0.1.0"
