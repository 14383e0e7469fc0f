"""Exact birational invariants of hypersurfaces in products of projective
spaces: cones of divisors, Cox rings, flips, GIT chambers."""

from .classify import ClassificationReport, Level, MDSStatus, classify, cox_descriptor, mov_chamber_decomposition
from .cohomology import CoxPresentation, h0_X, h_X, koszul_hilbert
from .cones import LatticeMap, RationalCone, cone_contains, cone_from_rays, cone_union_2d
from .git import WeightSystem, chamber_fan, irrelevant_ideal
from .hypersurface import AmbientProduct, Hypersurface, ProjectivePoint, flip_backward, flip_forward
from .polyalg import Poly, PolyRing, groebner_basis, ideal_codim, parse_poly

__version__ = "0.1.0"
