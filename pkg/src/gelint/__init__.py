"""Generalized complete elliptic integrals K_{p,q,r}, E_{p,q,r} and their Legendre-type relation."""

from .errors import ConvergenceError, DivergenceError, DomainError, GelintError, IntegrandError
from .gci import (
    DIVERGENT,
    Backend,
    GciPoint,
    GciValue,
    Which,
    dE_dk,
    dK_dk,
    eval_E,
    eval_K,
    eval_K_minus_E,
    eval_theta_form,
    limit_E_at_1,
    limit_K_at_1,
)
from .gtrig import GTrigParams, arcsin_pq, cos_pq, sin_pq
from .identities import (
    ElliottParams,
    LegendreReport,
    elliott_bridge_factor,
    elliott_residual,
    elliott_rhs,
    legendre_constancy_scan,
    legendre_residual,
    map_pqrk_to_elliott,
    ode_residual,
    proof_coefficients,
    vanishing_product,
)
from .params import INF, Exponent, ParamTriple, complementary_modulus, conjugate, validate_triple
from .special import beta, log_gamma, pi_pq

__version__ = "0.1.0"
