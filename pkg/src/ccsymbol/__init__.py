"""Exact Contou-Carrere symbols of unit Laurent series over artinian local rings."""

from ._kernels import BACKEND
from ._rational import RATIONAL_BACKEND
from .cohomology import (
    CoboundaryWitness,
    PairingHandle,
    canonical_coboundary,
    check_steinberg_map,
    check_two_cocycle,
    coboundary_from_witness,
    verify_characterization,
)
from .errors import *  # noqa: F403
from .laurent import (
    GammaClass,
    LaurentSeries,
    classify_gamma,
    compose,
    derivative,
    exp_series,
    log_one_plus,
    ls_add,
    ls_invert,
    ls_mul,
    ls_neg,
    ls_sub,
    residue,
    winding_number,
)
from .parsing import SeriesAst, parse_expression, parse_ring_spec, parse_series
from .rings import (
    Ring,
    RingElement,
    apply_hom,
    arith,
    div_by_integer,
    in_maximal_ideal,
    integers_mod_prime_power,
    invert_unit,
    is_unit,
    make_ring,
    nilpotency_order,
    prime_field,
    rationals,
    truncated_algebra,
)
from .sampling import PROFILES, random_gamma_series
from .symbol import (
    NormContext,
    SymbolValue,
    adjunction_sides,
    cc_symbol,
    commutator_pairing,
    norm_map,
    reparameterized_symbol,
    required_pos_bound,
    residue_symbol,
    tame_symbol,
    verify_adjunction,
)
from .witt import (
    WittDecomposition,
    finite_product,
    neg_witt_params,
    pos_witt_params,
    split_gamma0,
    witt_decompose,
    witt_reconstruct,
)

__version__ = "0.1.0"
