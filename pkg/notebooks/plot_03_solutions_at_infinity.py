"""
Solutions escaping to infinity
==============================

Eliminating y counts the solutions with finite x; eliminating x counts the
ones with finite y.  When the leading coefficients of f and theta share a
factor, some solutions run off to infinity and the two counts differ.
Giving the leading coefficients of f a generic constant term brings them
back, and comparing the three degrees tells us how many solutions are
finite.
"""

from elimdeg import dual_order_analysis, minding_degree, parse_problem, render_report

# f = b x^2 y^4 + (c + e x) y^2 + g x^3 y + h + k x^2
# theta = beta x^5 y^2 + (gamma + delta x^2) y + lambda + mu x^4
degenerate = parse_problem("""
f = #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2
theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4
""")

for var in ("y", "x"):
    r = minding_degree(degenerate.f, degenerate.theta, var)
    print(f"eliminating {var}: degree {r.minding_degree}")

###############################################################################
# The dual-order report combines both orders with the genericized degree.

print(render_report(dual_order_analysis(degenerate.f, degenerate.theta)))

###############################################################################
# With concrete coefficients the common factors of the leading coefficients
# are visible directly.

concrete = parse_problem("""
f = 3*x^2*y^4 + 2*y^2 - 5*x*y^2 + 7*x^3*y + 1 - 4*x^2
theta = 2*x^5*y^2 - 3*y + x^2*y + 6 + 5*x^4
""")
report = dual_order_analysis(concrete.f, concrete.theta, concrete=(concrete.f, concrete.theta))
print("gcd of leading coefficients in y:", report.gcd_lead_y_order)
print("gcd of leading coefficients in x:", report.gcd_lead_x_order)
