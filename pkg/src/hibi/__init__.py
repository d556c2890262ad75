"""Divisor class groups and Picard groups of projective Hibi varieties."""

from .divisors import (
    CartierCertificate,
    DivisorClass,
    TorusDivisor,
    cartier_certificate_by_recipe,
    cartier_obstruction,
    class_generators,
    class_group_rank,
    is_cartier,
    phi,
    picard_generators,
    picard_rank,
    reduce_to_class,
)
from .errors import HibiError
from .ideals import IdealLattice, char_vector, enumerate_ideals, filters, is_ideal, join, meet
from .polytope import OrderPolytope, contains, incident_facets, integral_points, order_polytope
from .poset import (
    BOT,
    TOP,
    Arborescence,
    AugmentedPoset,
    CoveringEdge,
    Poset,
    antichain,
    arborescence,
    augment,
    chain,
    contract_covering,
    covering_relations,
    disjoint_union,
    hasse_components,
    maximal_elements,
    minimal_elements,
    opposite,
    poset_from_covers,
    product,
)
from .ring import hibi_relations, ring_generators, verify_relation_exponents
from .zlinalg import cl_oracle, cokernel, integer_solve, pic_oracle, smith_normal_form

__version__ = "0.1.0"
