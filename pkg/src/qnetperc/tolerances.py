"""Shared numerical tolerances.

All comparison thresholds live here so the solvers and the property tests
agree on what "equal" means.
"""

# Absolute tolerance for algebraic identities and vector comparisons.
ATOL = 1e-12

# Bisection stops when the bracket is narrower than this.
BISECTION_TOL = 1e-9
BISECTION_MAX_ITER = 60

# Disorder assignment must hit the requested mean this closely.
MEAN_ENFORCE_TOL = 1e-6
MEAN_ENFORCE_MAX_ITER = 100
