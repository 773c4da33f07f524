"""Alexander invariants of oriented tangles over Z[t, t^-1]."""

from .laurent import LaurentPoly, Unit, normalize, eq_up_to_unit, parse_poly, render, poly, monomial, T, ONE, ZERO
from .matrix import RingMatrix, det, minor, jacobi_complementary
from .exterior import ExteriorElement, index_sets, wedge, wedge_sign, exterior_power_matrix
from .burau import BraidWord, BurauMorphism, burau_generator, burau_word, parse_braid, parse_signs, render_signs
from .alexander import GradedMap, Presentation, alexander_function, graded_map_compose, graded_map_eq, identity_map
from .tangle import Braid, Cap, Cup, IllFormedError, TangleWord, rho_word, validate
from .plat import PlatDescription, build_presentation, canonical_word, rho_plat

__version__ = "0.1.0"
