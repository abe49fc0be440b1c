"""Finite Niebrzydowski tribrackets, their polynomials and link colorings."""

from .algebra import (
    InvalidTribracket,
    Tribracket,
    ValidationReport,
    alexander_tribracket,
    all_subtribrackets,
    dehn_tribracket,
    evaluate,
    find_isomorphism,
    generated_subtribracket,
    is_closed,
    is_homomorphism,
    make_tribracket,
    relabel,
    validate,
)
from .coloring import (
    EnhancementMultiset,
    count_colorings,
    enhancement,
    enumerate_colorings,
    image_subtribracket,
)
from .diagram import (
    CROSSING_RULE,
    LinkDiagram,
    PDCode,
    crossing_relations,
    faces,
    parse_pd,
    reverse_component,
)
from .polynomial import (
    Profile,
    TriPolynomial,
    canonical_string,
    element_monomial,
    is_homogeneous,
    parse_polynomial,
    profile,
    subtribracket_polynomial,
    tribracket_polynomial,
)

__version__ = "0.1.0"
