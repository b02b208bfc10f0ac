"""Exact combinatorics of noncrossing-partition lattices and dual braid
monoids over finite Coxeter groups, with the simplicial machinery needed
to build and homology-check their classifying complexes."""

from .coxeter import CoxeterSystem, make_system, parse_descriptor
from .lattice import NCLattice, absolute_leq, build_nc, verify_nc_lattice
from .monoid import DualMonoid, GroupForm
from .simplicial import AbstractComplex, from_maximal_faces, order_complex
from .complexes import build_k, build_x_plus, reduced_homology
from .homology import IntegerMatrix, homology, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "CoxeterSystem", "make_system", "parse_descriptor",
    "NCLattice", "absolute_leq", "build_nc", "verify_nc_lattice",
    "DualMonoid", "GroupForm",
    "AbstractComplex", "from_maximal_faces", "order_complex",
    "build_k", "build_x_plus", "reduced_homology",
    "IntegerMatrix", "homology", "smith_normal_form",
]
