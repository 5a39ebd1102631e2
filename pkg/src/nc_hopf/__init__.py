"""Exact combinatorics of non-crossing partitions, the two unshuffle
bialgebras built on them, and the moment-cumulant transforms of free
probability."""

from .coefficients import Coefficient, Poly, coeff_str, poly_str
from .errors import (
    AlgebraMismatchError,
    CarrierMismatchError,
    InconsistencyError,
    NcHopfError,
    OrderError,
    ParseError,
    SizeLimitError,
    TruncationError,
)
from .functionals import (
    Algebra,
    Character,
    InfinitesimalCharacter,
    LinearFunctional,
    augmentation,
    check_character,
    check_infinitesimal,
    convolve,
    exp_prec,
    extend_multiplicative,
    extract_infinitesimal,
    half_convolve,
    pullback_sp,
    random_functional,
    random_infinitesimal,
    solve_left_fixed_point,
    standard_section,
)
from .partitions import (
    NonCrossingPartition,
    SetPartition,
    admissible_splits,
    bell_number,
    catalan_number,
    enumerate_nc_partitions,
    enumerate_set_partitions,
    full_partition,
    is_noncrossing,
    moebius,
    moebius_to_top,
    parse_partition,
    singleton_partition,
    standardize,
)
from .tensor import (
    UNIT,
    DecoratedNC,
    Word,
    barword_text,
    delta_bar,
    delta_nc,
    delta_word,
    parse_atom,
    parse_word,
    sp,
    tensor_text,
)
from .transforms import (
    CumulantSequence,
    MomentSequence,
    MultiCumulantMap,
    MultiMomentMap,
    bell_polynomials,
    classical_cumulants_from_moments,
    classical_moments_from_cumulants,
    free_cumulants_from_moments,
    free_moments_from_cumulants,
    generalized_free_cumulants,
    kappa_powers,
    symbolic_cumulants,
    symbolic_moments,
)
from .trees import (
    EdgeCut,
    admissible_edge_cuts,
    hierarchy_tree,
    parse_tree,
    tree_coproduct,
    tree_degree,
    tree_text,
)
from .verify import SuiteReport, run_suite

__version__ = "0.1.0"
