"""Degree of the eliminant of two bivariate equations.

Given ``f = A0*y^m + ... + Am`` and ``theta = B0*y^n + ... + Bn`` with
polynomial coefficients in x, the resultant with respect to y is
``B0^m * f(x, y1) * ... * f(x, yn)`` over the roots ``yi`` of theta.  Each
root grows like ``x^h``; substituting it into f gives a factor of degree
``k = max_j (deg Aj + j*h)``.  Summing

    m * deg(B0) + k1 + ... + kn

gives the generic degree of the eliminant, always an integer.

Everything here works on :class:`PatternPoly` shapes; concrete inputs are
reduced to their support first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, DegenerateSharedFactor, InternalInvariantViolation
from .pattern import PatternPoly, as_pattern
from .poly import BiPoly, UniPoly, uni_gcd
from .polygon import root_degrees

NOT_APPLICABLE = None

FINITE_COUNT_ASSUMPTION = (
    "finite_count assumes every escaped solution has exactly one infinite coordinate")


@dataclass(frozen=True)
class EdgeContribution:
    h: Fraction
    multiplicity: int
    k: Fraction


@dataclass(frozen=True)
class DegreeReport:
    elim_var: str
    m: int
    n: int
    b: int
    edge_contributions: tuple
    t_theta: int
    t_contribution: int
    minding_degree: int
    bezout_bound: int
    finck_degree: int | None


@dataclass(frozen=True)
class InfinityReport:
    D_x: int
    D_y: int
    D_gen: int
    gcd_lead_y_order: UniPoly | None = None
    gcd_lead_x_order: UniPoly | None = None
    variables: tuple = ("x", "y")

    @property
    def lost_x(self) -> int:
        return self.D_gen - self.D_x

    @property
    def lost_y(self) -> int:
        return self.D_gen - self.D_y

    @property
    def finite_count(self) -> int:
        return self.D_x + self.D_y - self.D_gen


def _top_degrees(p: PatternPoly) -> dict:
    """``{j: deg of coefficient of y^j}`` in the pattern's own orientation."""
    return {j: max(xs) for j, xs in p.support_sets.items()}


def factor_degree(f, h, main_var: str | None = None) -> Fraction:
    """Degree in x of ``f(x, c*x^h)`` for generic c."""
    f = as_pattern(f)
    if main_var is not None:
        f = f.oriented(main_var)
    if f.is_zero():
        raise DegenerateInput("empty support")
    h = Fraction(h)
    return max(b + j * h for j, b in _top_degrees(f).items())


def bezout_bound(f, theta) -> int:
    f, theta = as_pattern(f), as_pattern(theta)
    return int(f.total_degree * theta.total_degree)


def finck_degree(f, theta, elim_var: str | None = None):
    """``m*n' + n*m'`` when every coefficient of f has the full dense support
    of one degree m' (likewise theta with n'); NOT_APPLICABLE otherwise."""
    f, theta = as_pattern(f), as_pattern(theta)
    if elim_var is not None:
        f, theta = f.oriented(elim_var), theta.oriented(elim_var)

    def uniform_degree(p):
        sets = p.support_sets
        top = max(sets)
        if sorted(sets) != list(range(top + 1)):
            return None, top
        degs = {max(xs) for xs in sets.values()}
        if len(degs) != 1:
            return None, top
        d = degs.pop()
        if any(xs != frozenset(range(d + 1)) for xs in sets.values()):
            return None, top
        return d, top

    m_prime, m = uniform_degree(f)
    n_prime, n = uniform_degree(theta)
    if m_prime is None or n_prime is None:
        return NOT_APPLICABLE
    return m * n_prime + n * m_prime


def minding_degree(f, theta, elim_var: str | None = None) -> DegreeReport:
    """Predicted degree of the resultant of f and theta eliminating ``elim_var``."""
    f, theta = as_pattern(f), as_pattern(theta)
    if f.variables != theta.variables:
        raise ValueError("f and theta use different variables")
    elim_var = elim_var or f.variables[1]
    f, theta = f.oriented(elim_var), theta.oriented(elim_var)
    for name, p in (("f", f), ("theta", theta)):
        if p.is_zero() or p.degree_in(elim_var) < 1:
            raise DegenerateInput(f"{name} does not involve {elim_var}")

    summary = root_degrees(theta)
    f_degs = _top_degrees(f)
    m = max(f_degs)
    b = _top_degrees(theta)[summary.n]

    t_contribution = 0
    if summary.t:
        if 0 not in f_degs:
            raise DegenerateSharedFactor(
                f"resultant vanishes identically: common factor {elim_var}")
        t_contribution = summary.t * f_degs[0]

    contributions = []
    total = Fraction(m * b + t_contribution)
    for edge in summary.edges:
        k = factor_degree(f, edge.root_degree)
        contributions.append(EdgeContribution(edge.root_degree, edge.multiplicity, k))
        total += edge.multiplicity * k
    if total.denominator != 1:
        raise InternalInvariantViolation(f"non-integer eliminant degree {total}")
    total = int(total)
    bound = bezout_bound(f, theta)
    if not 0 <= total <= bound:
        raise InternalInvariantViolation(f"degree {total} outside [0, {bound}]")
    return DegreeReport(
        elim_var=elim_var,
        m=m,
        n=summary.n,
        b=b,
        edge_contributions=tuple(contributions),
        t_theta=summary.t,
        t_contribution=t_contribution,
        minding_degree=total,
        bezout_bound=bound,
        finck_degree=finck_degree(f, theta),
    )


def genericize_leading(f, theta, symmetric: bool = False):
    """Give f's leading coefficients a generic constant term in both orders.

    The coefficient of the top power of y gains an x^0 term and the
    coefficient of the top power of x gains a y^0 term.  With
    ``symmetric=True`` theta is treated the same way.
    """
    def lift(p: PatternPoly) -> PatternPoly:
        x, y = p.variables
        return p.with_monomials((0, int(p.degree_in(y))), (int(p.degree_in(x)), 0))

    f, theta = as_pattern(f), as_pattern(theta)
    return lift(f), (lift(theta) if symmetric else theta)


def dual_order_analysis(f, theta, concrete=None, symmetric: bool = False) -> InfinityReport:
    """Compare eliminant degrees in both orders and count escaped solutions.

    ``concrete`` is an optional (f, theta) pair of :class:`BiPoly`; when
    given, the gcds of the leading coefficients in both orders are reported.
    """
    f, theta = as_pattern(f), as_pattern(theta)
    x, y = f.variables
    d_x = minding_degree(f, theta, y).minding_degree
    d_y = minding_degree(f, theta, x).minding_degree
    gf, gtheta = genericize_leading(f, theta, symmetric)
    d_gen = minding_degree(gf, gtheta, y).minding_degree
    d_gen_other = minding_degree(gf, gtheta, x).minding_degree
    if d_gen != d_gen_other:
        raise InternalInvariantViolation(
            f"genericized degrees disagree: {d_gen} (eliminating {y}) vs {d_gen_other} (eliminating {x})")

    g_y = g_x = None
    if concrete is not None:
        cf, ctheta = concrete
        g_y = leading_gcd(cf, ctheta, y)
        g_x = leading_gcd(cf, ctheta, x)

    report = InfinityReport(d_x, d_y, d_gen, g_y, g_x, (x, y))
    if report.lost_x < 0 or report.lost_y < 0:
        raise InternalInvariantViolation("genericization lowered the eliminant degree")
    return report


def leading_gcd(f: BiPoly, theta: BiPoly, main_var: str) -> UniPoly:
    """gcd of the leading coefficients of f and theta with respect to ``main_var``."""
    return uni_gcd(f.coeffs_in(main_var)[0], theta.coeffs_in(main_var)[0])
