"""
Equations with coefficients of one common degree
================================================

If every coefficient of f (as a polynomial in y) has degree m' and every
coefficient of theta has degree n', all roots of theta stay bounded and the
eliminant has degree m*n' + n*m'.  Once the coefficient degrees differ the
shortcut no longer applies.
"""

from elimdeg import PatternPoly, finck_degree, minding_degree, parse_problem

f = PatternPoly.dense({0: 3, 1: 3, 2: 3})      # m = 2, m' = 3
theta = PatternPoly.dense({0: 1, 1: 1, 2: 1})  # n = 2, n' = 1
print("shortcut:", finck_degree(f, theta), " general rule:", minding_degree(f, theta).minding_degree)

###############################################################################
# Unequal coefficient degrees: the shortcut reports ``None``.

problem = parse_problem("""
f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)
theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)
""")
print("shortcut:", finck_degree(problem.f, problem.theta),
      " general rule:", minding_degree(problem.f, problem.theta).minding_degree)
