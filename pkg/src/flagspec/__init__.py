"""Exact spectral and isomorphism tools for block designs and their flag graphs."""

from .catalog import (
    BIPLANE_IDS,
    CATALOG_IDS,
    REFERENCE_GRAPH_NAMES,
    CatalogEntry,
    clebsch_graph,
    get_design,
    get_entry,
    reference_graph,
)
from .designs import (
    Design,
    DesignParams,
    Flag,
    derive_params,
    design_from_difference_set,
    design_from_json,
    design_to_json,
    enumerate_flags,
    incidence_graph,
    validate_design,
)
from .errors import (
    FlagspecError,
    NonIntegralClaim,
    NonIntegralParams,
    NotABiplane,
    PairCountMismatch,
    RepeatedBlock,
    SameVertex,
    TrivialDesign,
    UnequalBlockSizes,
    UnknownCatalogId,
    UnknownGraphName,
)
from .flag_graphs import FlagGraph, flag_graph_to_json, gamma1, gamma2
from .graphs import (
    Graph,
    common_neighbors,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_profile,
    girth,
    graph_from_graph6,
    graph_from_json,
    graph_to_graph6,
    graph_to_json,
    line_graph,
)
from .isomorphism import (
    CanonicalForm,
    canonical_form,
    design_isomorphic,
    is_isomorphic,
)
from .polynomials import IntPolynomial, count_roots_in, square_free_part
from .regularity import (
    PredictedProfile,
    PredictionReport,
    RegularityProfile,
    check_against_prediction,
    classify,
    predicted_gamma1_profile,
    predicted_gamma2_profile,
)
from .reporting import (
    CriterionResult,
    ReproductionReport,
    render_report,
    run_reproduction,
)
from .spectra import (
    AlgebraicEigenvalue,
    SpectrumClaim,
    char_poly,
    claim_from_json,
    claim_to_json,
    claim_to_polynomial,
    claim_to_text,
    cospectral,
    formula_spectrum_gamma1,
    formula_spectrum_incidence,
    numeric_spectrum,
    verify_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicEigenvalue",
    "BIPLANE_IDS",
    "CATALOG_IDS",
    "CanonicalForm",
    "CatalogEntry",
    "CriterionResult",
    "Design",
    "DesignParams",
    "Flag",
    "FlagGraph",
    "FlagspecError",
    "Graph",
    "IntPolynomial",
    "NonIntegralClaim",
    "NonIntegralParams",
    "NotABiplane",
    "PairCountMismatch",
    "PredictedProfile",
    "PredictionReport",
    "REFERENCE_GRAPH_NAMES",
    "RegularityProfile",
    "RepeatedBlock",
    "ReproductionReport",
    "SameVertex",
    "SpectrumClaim",
    "TrivialDesign",
    "UnequalBlockSizes",
    "UnknownCatalogId",
    "UnknownGraphName",
    "canonical_form",
    "char_poly",
    "check_against_prediction",
    "claim_from_json",
    "claim_to_json",
    "claim_to_polynomial",
    "claim_to_text",
    "classify",
    "clebsch_graph",
    "common_neighbors",
    "complete_graph",
    "connected_components",
    "cospectral",
    "count_roots_in",
    "cycle_graph",
    "degree_profile",
    "derive_params",
    "design_from_difference_set",
    "design_from_json",
    "design_isomorphic",
    "design_to_json",
    "enumerate_flags",
    "flag_graph_to_json",
    "formula_spectrum_gamma1",
    "formula_spectrum_incidence",
    "gamma1",
    "gamma2",
    "get_design",
    "get_entry",
    "girth",
    "graph_from_graph6",
    "graph_from_json",
    "graph_to_graph6",
    "graph_to_json",
    "incidence_graph",
    "is_isomorphic",
    "line_graph",
    "numeric_spectrum",
    "predicted_gamma1_profile",
    "predicted_gamma2_profile",
    "reference_graph",
    "render_report",
    "run_reproduction",
    "square_free_part",
    "validate_design",
    "verify_spectrum",
]
