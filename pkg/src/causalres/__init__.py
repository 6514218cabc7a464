"""Exact calculator for resource theories of causal influence.

The package decides, with rational arithmetic throughout, when one causal
resource can be freely converted into another. Deterministic functions are
ordered by image size; distributions over functions are ordered by an exact
convex-hull feasibility program over the free operations. On top of the
orders sit the monotones, downward closures, Hasse diagrams and guessing
game quantities, plus a small command-line front end (`causalres`).
"""

from .beta_spectrum import BetaSpectrum, alt_convertible, beta_vector, cumulative_monotones
from .bit2bit import (
    FLIP,
    IDENT,
    RESET0,
    RESET1,
    BitParams,
    CanonicalForm,
    MonotoneTriple,
    bit_convertible_fast,
    bit_resource,
    canonical_form,
    monotone_triple,
    parametrize,
    table1_vertices,
    tetra_coords,
)
from .channel_game import (
    Prior,
    ace,
    ace_dist,
    guessing_probability,
    max_postselected_connection,
    min_beta_over_preimage,
    posterior_causal_connection,
)
from .core import (
    FiniteFunction,
    FunctionDistribution,
    Rational,
    StochasticMap,
    all_functions,
    canonical_preimage,
    compose_distributions,
    compose_functions,
    image_size,
    to_stochastic,
)
from .errors import (
    DuplicateName,
    MalformedWeight,
    NonNormalized,
    NotConvertible,
    ResourceBudgetExceeded,
    SizeMismatch,
    TableOutOfRange,
    ZeroMarginal,
)
from .library import BUILTIN
from .rtcaus import (
    DeterministicWitness,
    InfluenceBits,
    caus_convertible,
    caus_monotone,
    conversion_witness,
    is_free_function,
)
from .rtknowcaus import (
    DEFAULT_COMB_BUDGET,
    CombMixture,
    ConversionVerdict,
    ExtremalComb,
    HasseGraph,
    apply_extremal,
    apply_mixture,
    downward_closure_vertices,
    enumerate_extremal_combs,
    hasse,
    is_free_resource,
    know_convertible,
)

__all__ = [
    "BUILTIN",
    "BetaSpectrum",
    "BitParams",
    "CanonicalForm",
    "CombMixture",
    "ConversionVerdict",
    "DEFAULT_COMB_BUDGET",
    "DeterministicWitness",
    "DuplicateName",
    "ExtremalComb",
    "FLIP",
    "FiniteFunction",
    "FunctionDistribution",
    "HasseGraph",
    "IDENT",
    "InfluenceBits",
    "MalformedWeight",
    "MonotoneTriple",
    "NonNormalized",
    "NotConvertible",
    "Prior",
    "RESET0",
    "RESET1",
    "Rational",
    "ResourceBudgetExceeded",
    "SizeMismatch",
    "StochasticMap",
    "TableOutOfRange",
    "ZeroMarginal",
    "ace",
    "ace_dist",
    "all_functions",
    "alt_convertible",
    "apply_extremal",
    "apply_mixture",
    "beta_vector",
    "bit_convertible_fast",
    "bit_resource",
    "canonical_form",
    "canonical_preimage",
    "caus_convertible",
    "caus_monotone",
    "compose_distributions",
    "compose_functions",
    "conversion_witness",
    "cumulative_monotones",
    "downward_closure_vertices",
    "enumerate_extremal_combs",
    "guessing_probability",
    "hasse",
    "image_size",
    "is_free_function",
    "is_free_resource",
    "know_convertible",
    "max_postselected_connection",
    "min_beta_over_preimage",
    "monotone_triple",
    "parametrize",
    "posterior_causal_connection",
    "table1_vertices",
    "tetra_coords",
    "to_stochastic",
]
