"""Desk-scale numerics for critical-line zero products and their
Riemann-type functional equations, with a quadratic Dedekind analogue.

The library evaluates the classical special functions (Gamma, zeta, xi,
the Riemann-Siegel theta and Hardy Z), locates critical-line zeros, builds
the symmetric truncated zero product h_N and its meromorphic companion
eta_N, exercises the sharp log4/pi zero-density uniqueness criterion with
its counterexamples, and instantiates the whole construction for quadratic
number fields.
"""

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (
    CompletenessError,
    ConfigError,
    ConsistencyError,
    DensityError,
    DomainError,
    FormatError,
    PoleError,
    ValidationError,
    ZetalineError,
)
from .eta import (
    ScanPoint,
    TruncatedProductSpec,
    eta_fe_residual,
    eta_residue_at_one,
    eta_truncated,
    h_log_abs,
    h_truncated,
    product_tail_estimate,
    sigma_scan,
)
from .special import (
    complex_gamma,
    complex_log_gamma,
    complex_zeta,
    hardy_Z,
    hardy_Z_batch,
    hurwitz_zeta,
    reflection_factor,
    riemann_siegel_theta,
    xi,
    zero_count_estimate,
    zeta_euler_maclaurin,
)
from .uniqueness import (
    LOG4_OVER_PI,
    DirichletSeries,
    FunctionalEquationDescriptor,
    GrowthCheckResult,
    MeromorphicTestFunction,
    build_F,
    choose_mn,
    counterexample_descriptor,
    counterexample_series,
    counterexample_zero_set,
    fe_residual,
    probe_F,
    product_growth_check,
    remark_counterexamples,
    trivial_zero_classifier,
)
from .zeros import (
    PointSet,
    ZeroList,
    density_slope,
    disc_count,
    find_zeros_up_to,
    load_zeros,
    save_zeros,
    t_for_zero_count,
)

__version__ = "0.1.0"
