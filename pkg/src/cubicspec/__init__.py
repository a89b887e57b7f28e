"""Spectral toolkit for cubic graphs.

Truncation and its exact spectral map, chromatic-index transport,
spectral recognition of truncated graphs, perfect-matching certificates,
and a cospectral corpus scanner, all at desk scale with exact
certificates.
"""

from .errors import (
    BudgetExceededError,
    CertificationError,
    CubicspecError,
    GraphFormatError,
    StructureError,
)
from .graphs import (
    Graph,
    bipartite_double,
    catalog,
    catalog_names,
    closed_walks,
    disjoint_union,
    line_graph,
    subdivision,
    triangle_count,
)
from .graph6 import parse_graph6, write_graph6
from .isomorphism import CanonicalLabel, canonical_form, canonical_graph, is_isomorphic
from .enumeration import diamond_ring, enumerate_cubic
from .spectral import (
    CharPoly,
    Spectrum,
    are_cospectral,
    char_poly,
    eigenvalues,
    rayleigh,
    rayleigh_formula_c1,
    rayleigh_formula_c2,
    truncated_shape_check,
    truncation_char_poly,
    truncation_spectrum_map,
)
from .truncation import (
    TruncationTrace,
    contract_triangles,
    family_pairs,
    recognize_truncation,
    truncate_full,
    truncate_full_traced,
    truncate_set,
)
from .matchings import (
    MatchingCertificate,
    has_perfect_matching,
    maximum_matching,
    perfect_matching_certificate,
)
from .coloring import (
    ChromaticIndexResult,
    chromatic_index,
    chromatic_index_of_truncation,
    chromatic_number_cubic,
    chromatic_number_small,
    lift_coloring,
    restrict_coloring,
    validate_edge_coloring,
)
from .hamiltonicity import is_hamiltonian

__version__ = "0.1.0"
