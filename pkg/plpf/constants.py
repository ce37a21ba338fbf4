"""Project-wide constants"""
import math

# Special-function accuracy contract
SPECFUN_ABS_TOL        = 1e-12
SPECFUN_REL_TOL        = 1e-10

# Fading
NAKAGAMI_M_MIN         = 0.5

# Sampling
DEFAULT_TRUNCATION_EPS = 1e-4
TOY_UPPER_BOUND        = 5.0

# Monte Carlo
MIN_TRIALS             = 100
MIN_KS_SAMPLES         = 100
Z_95                   = 1.96
KS_CRITICAL_1PCT       = 1.628

# Analytic
EULER_GAMMA            = 0.57721566490153286061
LN2                    = math.log(2.0)
SUPERPOSITION_GAP      = LN2
CAPACITY_BOUND_GAP     = 0.0013

# Closed forms of P[xi_k > xi_{k+j}] in the standard network, keyed by (i, j)
REORDER_CLOSED_FORMS = {
    (1, 1): 1.0 - LN2,
    (1, 2): 3.0 - 4.0 * LN2,
    (2, 2): 12.0 * LN2 - 8.0,
    (3, 3): 167.0 / 2.0 - 120.0 * LN2,
    (4, 4): 1120.0 * LN2 - 776.0,
}
