"""
Default Numerical Settings
==========================

Default tolerances, step sizes and harness parameters used across the
package. Adjust these values to change the behaviour of every solver and
estimator that does not receive an explicit override.
"""

# ====================================
# Root Finding
# ====================================

# Absolute tolerance on |f(x)| at the returned root. Downstream values are
# O(1) to O(1e3), so this leaves at least six significant digits.
DEFAULT_ABS_TOL = 1e-12

# Iteration cap for the safeguarded Newton solver
DEFAULT_MAX_ITER = 200

# Relative step of the central difference used when no derivative is supplied
# (step = DEFAULT_NEWTON_STEP * max(1, |x|))
DEFAULT_NEWTON_STEP = 1e-7


# ====================================
# Special Functions
# ====================================

# Largest chi-square order evaluated through the finite Poisson sum; larger
# orders go through the regularized incomplete gamma function of scipy.
POISSON_SUM_MAX_ORDER = 512


# ====================================
# Large-System Approximation
# ====================================

# Negative values of the selection-gain variance above this threshold are
# floating-point cancellation and are clamped to zero.
VARIANCE_CLAMP_TOL = 1e-9


# ====================================
# Antenna Optimization
# ====================================

# Relative step for the derivatives of f, s and h in the stationary condition
# (step = STATIONARY_FD_STEP * max(1, x))
STATIONARY_FD_STEP = 1e-4

# Accepted |c'(x)| of the stationary-point solve
STATIONARY_ABS_TOL = 1e-10

# Tolerance of the bounded scalar maximizer used as fallback
FALLBACK_XATOL = 1e-9


# ====================================
# Monte Carlo Harness
# ====================================

# Trials per work unit. The partition is fixed, so results do not depend on
# the number of workers.
DEFAULT_CHUNK_TRIALS = 512

# Defaults for run configurations that omit them
DEFAULT_SEED = 20180101
DEFAULT_TRIALS = 10_000

# Two-sided 95% normal quantile used for confidence half-widths
CI95_Z = 1.96

# Environment variable capping the number of Monte Carlo workers
THREADS_ENV_VAR = "MIMOME_THREADS"
