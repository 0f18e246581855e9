"""
Checking the prediction with exact resultants
=============================================

The predicted degree is a statement about generic coefficients.  We can
test it by drawing random integer coefficients on the same support and
computing the Sylvester resultant exactly.
"""

from elimdeg import Method, parse_problem, resultant, sample_instance, sylvester, verify_degree

problem = parse_problem("""
f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)
theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)
""")

###############################################################################
# One instance, by hand.  Sampling is keyed by (seed, monomial), so the
# same seed always gives the same polynomial.

f = sample_instance(problem.f, seed=1, bound=1000)
theta = sample_instance(problem.theta, seed=2, bound=1000)
sm = sylvester(f, theta, "y")
print(f"Sylvester matrix is {sm.size}x{sm.size}, degree bound {sm.degree_bound}")

by_interp = resultant(f, theta, "y", Method.INTERP)
by_bareiss = resultant(f, theta, "y", Method.FRACTION_FREE)
assert by_interp == by_bareiss
print("resultant degree:", by_interp.degree)

###############################################################################
# Many instances at once.

result = verify_degree(problem, "y", trials=10, seed=0)
print("predicted", result.predicted, "agreement", result.agreement_fraction)
