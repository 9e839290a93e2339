"""Curse-of-dimensionality constants, fooling-function certificates and L_p discrepancy."""

from .analytic import (DecompositionConstants, HolderPair, SplineConstants, curse_constant,
                       decomposition_constants, decomposition_parts, h1, h1_stats, h_d,
                       holder_conjugate, initial_error, inverse_lower_bound, known_inverse_bounds,
                       maximize_scalar, spline_constants, spline_eval, spline_point_stats)
from .certifier import Certificate, certify, certify_best, certify_decomposition, certify_spline
from .discrepancy import (DiscrepancyEstimate, PointSet, QuadratureRule, estimate_discrepancy,
                          l2_discrepancy_exact, local_discrepancy, lp_discrepancy_cellwise,
                          lp_discrepancy_mc, reflect, reflect_rule, star_discrepancy_exact)
from .errors import ConvergenceError, DomainError, ParseError, ResourceError
from .pointsets import gen_grid, gen_halton, gen_random, read_rule, write_rule

__version__ = "0.1.0"
