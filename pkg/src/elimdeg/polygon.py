"""Newton polygon at infinity and the degrees of the roots.

For ``theta = B0*y^n + ... + Bn`` the roots behave like ``c * x^h`` as
x grows.  Plotting each present coefficient as the point
(power of y, degree in x of its coefficient), the upper convex hull of those
points has one edge per distinct root degree: an edge of slope ``s`` that
spans ``r`` units of the y-power axis carries ``r`` roots of degree
``h = -s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, InternalInvariantViolation
from .pattern import PatternPoly, as_pattern


@dataclass(frozen=True, order=True)
class NewtonPoint:
    j: int
    b: int


@dataclass(frozen=True)
class HullEdge:
    j_start: int
    j_end: int
    slope: Fraction

    @property
    def root_degree(self) -> Fraction:
        return -self.slope

    @property
    def multiplicity(self) -> int:
        return self.j_end - self.j_start


@dataclass(frozen=True)
class RootDegreeSummary:
    edges: tuple
    t: int
    n: int

    @property
    def root_degrees(self) -> list[tuple[Fraction, int]]:
        """``[(h, multiplicity), ...]`` in increasing ``h``."""
        return [(e.root_degree, e.multiplicity) for e in self.edges]


def newton_points(p, main_var: str | None = None) -> list[NewtonPoint]:
    p = as_pattern(p)
    if p.is_zero():
        raise DegenerateInput("empty support")
    main_var = main_var or p.variables[1]
    sets = p.coefficient_supports(main_var)
    return [NewtonPoint(j, max(xs)) for j, xs in sorted(sets.items())]


def _cross(o: NewtonPoint, a: NewtonPoint, b: NewtonPoint) -> int:
    return (a.j - o.j) * (b.b - o.b) - (a.b - o.b) * (b.j - o.j)


def upper_hull(points: list[NewtonPoint]) -> list[HullEdge]:
    """Upper convex hull from the leftmost to the rightmost point.

    Collinear points are absorbed, so consecutive edges have strictly
    decreasing slopes.
    """
    if not points:
        raise DegenerateInput("no Newton points")
    pts = list(points)
    if any(b.j <= a.j for a, b in zip(pts, pts[1:])):
        raise ValueError("points must be sorted by strictly increasing j")
    chain: list[NewtonPoint] = []
    for p in pts:
        # pop while the middle point is on or below the chord
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) >= 0:
            chain.pop()
        chain.append(p)
    return [HullEdge(a.j, b.j, Fraction(b.b - a.b, b.j - a.j))
            for a, b in zip(chain, chain[1:])]


def root_degrees(p, main_var: str | None = None) -> RootDegreeSummary:
    p = as_pattern(p)
    main_var = main_var or p.variables[1]
    if p.is_zero() or p.degree_in(main_var) < 1:
        raise DegenerateInput(f"polynomial does not involve {main_var}")
    pts = newton_points(p, main_var)
    edges = tuple(upper_hull(pts))
    summary = RootDegreeSummary(edges, pts[0].j, pts[-1].j)
    check_summary(summary)
    return summary


def check_summary(s: RootDegreeSummary) -> None:
    """Raise InternalInvariantViolation unless the hull is well formed."""
    if s.t + sum(e.multiplicity for e in s.edges) != s.n:
        raise InternalInvariantViolation("edge multiplicities do not tile [t, n]")
    for a, b in zip(s.edges, s.edges[1:]):
        if a.j_end != b.j_start:
            raise InternalInvariantViolation("hull edges are not contiguous")
        if not b.slope < a.slope:
            raise InternalInvariantViolation("hull slopes must strictly decrease")
    for e in s.edges:
        if e.multiplicity % e.root_degree.denominator:
            raise InternalInvariantViolation(
                f"root degree {e.root_degree} incompatible with lattice edge of length {e.multiplicity}")
