"""Finite-dimensional algebras, Lau products and their isomorphism checks."""

__version__ = "0.1.0"

from .scalar import I, ONE, ZERO, Scalar
from .algebra_core import (
    Algebra,
    AssociativityReport,
    Element,
    complex_field,
    find_identity,
    is_associative,
    multiply,
)
from .morphisms import (
    LinearMap,
    Subspace,
    is_character,
    is_homomorphism,
    subspace_report,
    verify_isomorphism,
)
from .constructions import (
    character_to_hom,
    direct_sum,
    generalized_lau_product,
    lau_product,
    trivializing_isomorphism,
    unitization,
    unitization_embedding,
)
from .analysis import distinguish, fingerprint, norm_report
from .corpus import CatalogSpec, HomSpec, catalog_algebra, catalog_homomorphism, random_element
from .formats import parse_algebra_file, parse_scalar
from .lab import run_lab
