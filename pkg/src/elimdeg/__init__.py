"""Predict and verify the degree of the eliminant of two bivariate
polynomial equations."""

__version__ = "0.1.0"

from .degree import (DegreeReport, InfinityReport, bezout_bound, dual_order_analysis,
                     factor_degree, finck_degree, genericize_leading, minding_degree)
from .errors import (DegenerateInput, DegenerateSharedFactor, InternalInvariantViolation,
                     MethodMismatch, MixedVariables, PolySyntaxError, ZeroDivisor)
from .oracle import (Method, SylvesterMatrix, VerificationResult, order_swap_check,
                     resultant, sample_instance, sylvester, verify_degree)
from .parse import Mode, ProblemSpec, format_problem, parse_problem
from .pattern import PatternPoly, pattern_of
from .poly import (NEG_INFINITY, BiPoly, UniPoly, coeffs_in, degree_in, eval_x, uni_divides,
                   uni_gcd)
from .polygon import HullEdge, NewtonPoint, RootDegreeSummary, newton_points, root_degrees, upper_hull
from .render import render_report
