"""
Eliminant degree versus the Bezout bound
========================================

Two curves of total degree 6 and 13 meet in at most 6*13 = 78 points, but
the equation left after eliminating y can have much lower degree.  The
Newton polygon of theta tells us how fast each root y(x) grows, and that
is enough to read off the exact degree.
"""

from elimdeg import minding_degree, parse_problem, render_report, root_degrees

# (x^d) stands for a polynomial in x of degree d with generic coefficients
problem = parse_problem("""
f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)
theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)
""")

###############################################################################
# The roots of theta grow like x^h.  Each hull edge gives one value of h and
# the number of roots sharing it.

summary = root_degrees(problem.theta)
for h, count in summary.root_degrees:
    print(f"{count} roots of degree {h}")

###############################################################################
# Substituting each root into f gives a factor of known degree; adding
# m * deg(B0) yields the degree of the eliminant.

report = minding_degree(problem.f, problem.theta, "y")
print(render_report(report))
print("Bezout allows", report.bezout_bound, "but the eliminant has degree", report.minding_degree)
