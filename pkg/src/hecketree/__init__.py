"""Exact arithmetic on quotients of the rank-two tree over F_q[T].

Builds the quotient of the Bruhat-Tits tree by a Hecke congruence group,
extracts the lattice of cuspidal harmonic cochains, and computes operator
algebras, their Eisenstein quotients, and cuspidal component groups --
everything over the integers, nothing floating-point.
"""

__version__ = "1.0.0"

from .errors import (
    BoundExceeded,
    HecketreeError,
    NonIntegral,
    NoStabilization,
)
from .fields import Fq
from .polyring import PolyRing
from .laurent import LaurentRing
from .levels import Level, level_for
from .tree import OrientedEdge, Vertex, act, mat_from_polys, stdmat
from .quotient import QuotientGraph, build_quotient
from .cusps import cusp_count, enumerate_cusps, rational_cusp_count
from .harmonic import Cochain, CochainSpace, expansion_value, fourier_coefficient
from .eisenstein import EisensteinCochain
from .hecke import (
    HeckeAction,
    first_coefficient,
    pairing_matrix,
    probe_edge,
    upper_cosets,
)
from .lattice import (
    FinAbGroup,
    MatrixLattice,
    component_group,
    eisenstein_quotient,
    gram_matrix,
    hecke_algebra_lattice,
    lattice_index,
)
