"""boundlab: list-decoding thresholds, ball-intersection combinatorics,
explicit-code bound checking, and Monte Carlo MAP decoding."""

from .entropy import (BAWGN, QEC, QSC, Channel, bhattacharyya, binary_entropy,
                      log_binomial, q_entropy, q_entropy_inverse,
                      q_entropy_tilde)
from .errors import (BracketExhaustedError, BudgetExceededError, DomainError,
                     InapplicableBoundError)
from .exponents import (F_q, M_binary, M_q, ZetaSolution, beta_of_zeta,
                         dM_dgamma0_reference, solve_zeta)
from .geometry import (ball_volume_log, brute_force_intersection,
                       euclid_intersection, euclid_intersection_bounds,
                       mu_exact, mu_log, nu_exact, nu_log)
from .codes import (LinearCode, WeightDistribution, corpus, dual,
                    erasure_entropy_exact, erasure_error_exact,
                    erasure_list_size_max, extended_hamming_8_4,
                    format_generator_text, full_space, hamming_7_4,
                    list_size_max, load_code, parse_generator_text,
                    random_code, repetition_code, single_parity_check_code,
                    weight_distribution, zero_code)
from .thresholds import (ThresholdResult, f_bawgn, g_perp, johnson_radius,
                         lsym_lower_bound, p_star, p_star_dual,
                         p_star_small_delta_limit, rudra_uurtamo_p0,
                         sigma2_star, sigma2_star_limit, tvz_upper_bound)
from .bounds import (DoubleCountingResult, DualWeightBoundResult,
                     PoltyrevParams, SphereBoundParams, check_double_counting,
                     check_samorodnitsky, dual_weight_bound, poltyrev_bound,
                     qsc_error_profile, qsc_exact_block_error, sphere_bound,
                     union_bhattacharyya_bound)
from .simulate import (ErrorEstimate, SimulationResult, SimulationSpec,
                       simulate, sweep, wilson_interval)
from .curves import Curve, read_csv, write_csv
from .figures import FIGURES, build_figure
from .verify import SUITES, PropertyReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "BAWGN", "QEC", "QSC", "Channel", "bhattacharyya", "binary_entropy",
    "log_binomial", "q_entropy", "q_entropy_inverse", "q_entropy_tilde",
    "BracketExhaustedError", "BudgetExceededError", "DomainError",
    "InapplicableBoundError",
    "F_q", "M_binary", "M_q", "ZetaSolution", "beta_of_zeta",
    "dM_dgamma0_reference", "solve_zeta",
    "ball_volume_log", "brute_force_intersection",
    "euclid_intersection", "euclid_intersection_bounds",
    "mu_exact", "mu_log", "nu_exact", "nu_log",
    "LinearCode", "WeightDistribution", "corpus", "dual",
    "erasure_entropy_exact", "erasure_error_exact", "erasure_list_size_max",
    "extended_hamming_8_4", "format_generator_text", "full_space",
    "hamming_7_4", "list_size_max", "load_code", "parse_generator_text",
    "random_code", "repetition_code", "single_parity_check_code",
    "weight_distribution", "zero_code",
    "ThresholdResult", "f_bawgn", "g_perp", "johnson_radius",
    "lsym_lower_bound", "p_star", "p_star_dual", "p_star_small_delta_limit",
    "rudra_uurtamo_p0", "sigma2_star", "sigma2_star_limit", "tvz_upper_bound",
    "DoubleCountingResult", "DualWeightBoundResult", "PoltyrevParams",
    "SphereBoundParams", "check_double_counting", "check_samorodnitsky",
    "dual_weight_bound", "poltyrev_bound", "qsc_error_profile",
    "qsc_exact_block_error", "sphere_bound", "union_bhattacharyya_bound",
    "ErrorEstimate", "SimulationResult", "SimulationSpec", "simulate",
    "sweep", "wilson_interval",
    "Curve", "read_csv", "write_csv",
    "FIGURES", "build_figure",
    "SUITES", "PropertyReport", "run_suites",
    "__version__",
]
