"""lpairs: Dirichlet L-function pairs sampled at the Riemann zeros.

Exact character arithmetic, certified special functions, a zero engine,
two L-evaluators (fast AFE + slow oracle), the Gonek-Landau explicit
formula, and the discrete mean-value reports behind the two
linear-independence / value-distinctness statistics.
"""

__version__ = "0.1.0"

from .characters import (
    DirichletCharacter,
    character,
    chi_eval,
    epsilon_factor,
    gauss_sum,
    parse_character,
)
from .criticalline import (
    CriticalLineConfig,
    ThmTwoReport,
    a2_gamma,
    c_constant,
    choose_p,
    make_config,
    thm2_report,
)
from .landau import (
    landau_error_budget,
    landau_main_term,
    landau_zero_sum,
    nearest_pp_distance,
    rational_point,
    von_mangoldt,
)
from .lfunc import LValue, l_afe, l_oracle
from .meanvalues import (
    BPolynomial,
    CoefficientSeries,
    MeanValueReport,
    a1_gamma,
    build_b_polynomial,
    coeff,
    predicted_constant,
    series_d,
    series_e,
    thm1_report,
)
from .specfun import (
    hardy_z,
    hurwitz_zeta,
    log_gamma,
    riemann_siegel_theta,
    x_factor,
    zeta_em,
)
from .zeros import ZeroTable, compute_zeros, count, load_zeros
