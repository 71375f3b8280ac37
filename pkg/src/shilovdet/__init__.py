"""Shilov boundary invariants of bounded symmetric domains."""

from .distinguish import Inconclusive, Isomorphic, SeparatedBy, distinguish, explain
from .domains import DomainError, Irreducible, Product, ambient_dim, parse_domain, rank, tube_class
from .graded import GradedPoly, NotExteriorForm, exterior_poincare, kunneth, recover_generators, top_degree
from .invariants import TriState, invariant_vector, type_v_alexander_check
from .shilov import lie_sphere_bundle_trivial, lie_sphere_orientable, model_dim, shilov_model
from .verify import enumerate_domains, find_coincidences, verify_theorem

__all__ = [
    "DomainError", "GradedPoly", "Inconclusive", "Irreducible", "Isomorphic", "NotExteriorForm",
    "Product", "SeparatedBy", "TriState", "ambient_dim", "distinguish", "enumerate_domains",
    "explain", "exterior_poincare", "find_coincidences", "invariant_vector", "kunneth",
    "lie_sphere_bundle_trivial", "lie_sphere_orientable", "model_dim", "parse_domain", "rank",
    "recover_generators", "shilov_model", "top_degree", "tube_class", "type_v_alexander_check",
    "verify_theorem",
]
__version__ = "0.1.0"
