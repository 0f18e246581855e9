"""Exact resultants and empirical verification of predicted degrees.

The resultant is the determinant of the Sylvester matrix, a square matrix
of univariate polynomials.  Two independent backends compute it:

* ``INTERP`` evaluates the matrix at consecutive integers, takes exact
  integer determinants, and interpolates.
* ``FRACTION_FREE`` runs Bareiss elimination directly on the polynomial
  entries with exact polynomial division.

Both work on integer polynomials after clearing row denominators.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .degree import minding_degree
from .errors import DegenerateInput, InternalInvariantViolation, MethodMismatch
from .pattern import PatternPoly, as_pattern
from .poly import (BiPoly, UniPoly, ipoly_eval, ipoly_exact_div, ipoly_mul,
                   ipoly_sub, rat_to_ipoly)

MASK64 = (1 << 64) - 1
DEFAULT_COEFF_BOUND = 10**6
BOTH_MAX_SIZE = 12


class Method(enum.Enum):
    INTERP = "interp"
    FRACTION_FREE = "bareiss"
    BOTH = "both"


@dataclass(frozen=True)
class SylvesterMatrix:
    size: int
    entries: tuple
    provenance: tuple

    @property
    def degree_bound(self) -> int:
        f, theta, elim_var = self.provenance
        n = theta.degree_in(elim_var)
        m = f.degree_in(elim_var)
        da = max(max(u.degree for u in f.coeffs_in(elim_var)), 0)
        db = max(max(u.degree for u in theta.coeffs_in(elim_var)), 0)
        return int(n * da + m * db)


@dataclass(frozen=True)
class Trial:
    id: int
    observed_degree: int | None
    zero: bool


@dataclass(frozen=True)
class VerificationResult:
    predicted: int
    trials: tuple

    @property
    def agreement_fraction(self) -> Fraction:
        hits = sum(1 for t in self.trials if t.observed_degree == self.predicted)
        return Fraction(hits, len(self.trials))

    @property
    def max_observed(self):
        seen = [t.observed_degree for t in self.trials if not t.zero]
        return max(seen) if seen else None


# ---------------------------------------------------------------------------
# Sylvester matrix and determinants
# ---------------------------------------------------------------------------

def sylvester(f: BiPoly, theta: BiPoly, elim_var: str) -> SylvesterMatrix:
    m, n = f.degree_in(elim_var), theta.degree_in(elim_var)
    if m < 1 or n < 1:
        raise DegenerateInput(f"both polynomials must involve {elim_var}")
    other = f.variables[1 - f.variables.index(elim_var)]
    zero = UniPoly((), other)
    a, b = f.coeffs_in(elim_var), theta.coeffs_in(elim_var)
    size = m + n
    rows = []
    for r in range(n):
        rows.append(tuple([zero] * r + a + [zero] * (size - r - m - 1)))
    for r in range(m):
        rows.append(tuple([zero] * r + b + [zero] * (size - r - n - 1)))
    return SylvesterMatrix(size, tuple(rows), (f, theta, elim_var))


def bareiss_det(rows, sub, mul, exact_div, is_zero, one):
    """Fraction-free determinant over any exact integral domain.

    The ring is described by the callables; ``rows`` is copied.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return sub(one, one)
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(sub(mul(pivot, row_i[j]), mul(lead, row_k[j])), prev)
            row_i[k] = sub(one, one)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else sub(sub(one, one), det)


def _int_det(rows):
    return bareiss_det(rows, lambda p, q: p - q, lambda p, q: p * q,
                       lambda p, q: p // q, lambda p: p == 0, 1)


def _ipoly_det(rows):
    return bareiss_det(rows, ipoly_sub, ipoly_mul, ipoly_exact_div,
                       lambda p: not p, [1])


def _integer_rows(sm: SylvesterMatrix):
    """Scale each row to integer coefficients; returns (rows, total scale)."""
    scale = 1
    out = []
    for row in sm.entries:
        den = 1
        for u in row:
            _, d = rat_to_ipoly(u.coeffs)
            den = lcm(den, d)
        out.append([rat_to_ipoly([c * den for c in u.coeffs])[0] for u in row])
        scale *= den
    return out, scale


def interpolation_nodes(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (``count`` of them)."""
    nodes = [0]
    k = 1
    while len(nodes) < count:
        nodes.append(k)
        if len(nodes) < count:
            nodes.append(-k)
        k += 1
    return nodes[:count]


def newton_interpolate(xs, ys) -> list[Fraction]:
    """Coefficients (lowest first) of the unique polynomial of degree
    < len(xs) through the points."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    # Horner on the Newton basis
    for i in range(n - 1, -1, -1):
        # coeffs := coeffs * (x - xs[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def _det_interp(int_rows, bound: int) -> list:
    nodes = interpolation_nodes(bound + 1)
    values = []
    for x0 in nodes:
        values.append(_int_det([[ipoly_eval(p, x0) for p in row] for row in int_rows]))
    coeffs = newton_interpolate(nodes, values)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InternalInvariantViolation("interpolated determinant is not integral")
        out.append(int(c))
    while out and not out[-1]:
        out.pop()
    return out


def determinant(sm: SylvesterMatrix, method: Method = Method.BOTH) -> UniPoly:
    var = sm.entries[0][0].var
    int_rows, scale = _integer_rows(sm)
    results = {}
    if method in (Method.INTERP, Method.BOTH):
        results[Method.INTERP] = _det_interp(int_rows, sm.degree_bound)
    if method in (Method.FRACTION_FREE, Method.BOTH):
        results[Method.FRACTION_FREE] = _ipoly_det(int_rows)
    if method is Method.BOTH:
        if results[Method.INTERP] != results[Method.FRACTION_FREE]:
            raise MethodMismatch("interpolation and Bareiss determinants differ")
    det = next(iter(results.values()))
    return UniPoly.from_ints(det, var, scale)


def resultant(f: BiPoly, theta: BiPoly, elim_var: str | None = None,
              method: Method | str | None = None) -> UniPoly:
    """Resultant of f and theta with respect to ``elim_var``.

    ``method=None`` cross-checks both backends for matrices up to 12x12
    and uses interpolation alone beyond that.
    """
    elim_var = elim_var or f.variables[1]
    sm = sylvester(f, theta, elim_var)
    if method is None:
        method = Method.BOTH if sm.size <= BOTH_MAX_SIZE else Method.INTERP
    return determinant(sm, Method(method))


def order_swap_check(f: BiPoly, theta: BiPoly, elim_var: str | None = None) -> bool:
    """Res(f, theta) == (-1)^(m*n) * Res(theta, f)."""
    elim_var = elim_var or f.variables[1]
    m, n = f.degree_in(elim_var), theta.degree_in(elim_var)
    lhs = resultant(f, theta, elim_var)
    rhs = resultant(theta, f, elim_var)
    return lhs == (rhs if (m * n) % 2 == 0 else -rhs)


# ---------------------------------------------------------------------------
# deterministic sampling
# ---------------------------------------------------------------------------

def splitmix64(state: int) -> int:
    z = (state + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def mix_key(*parts: int) -> int:
    """Hash integers into one 64-bit key; order of parts matters."""
    h = 0
    for p in parts:
        h = splitmix64(h ^ (p & MASK64))
    return h


def _draw_nonzero(key: int, bound: int) -> int:
    width = 2 * bound
    limit = (1 << 64) - (1 << 64) % width
    z = key
    while True:
        z = splitmix64(z)
        if z < limit:
            v = z % width
            return v - bound if v < bound else v - bound + 1


def sample_instance(p: PatternPoly, seed: int, bound: int = DEFAULT_COEFF_BOUND) -> BiPoly:
    """Concrete polynomial with a uniform nonzero integer in [-bound, bound]
    on every monomial of the pattern.  Each coefficient depends only on
    (seed, i, j)."""
    if bound < 1:
        raise ValueError("bound must be positive")
    return BiPoly({(i, j): _draw_nonzero(mix_key(seed, i, j), bound)
                   for i, j in p.support}, p.variables)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_degree(problem, elim_var: str | None = None, trials: int = 20,
                  seed: int = 0, bound: int = DEFAULT_COEFF_BOUND,
                  method: Method | str | None = None) -> VerificationResult:
    """Compare the predicted eliminant degree with exact resultants.

    Pattern problems are instantiated ``trials`` times; instance ``i`` uses
    the key ``mix_key(seed, i)`` for f and ``mix_key(key, 1)`` for theta.
    Concrete problems are checked as given.
    """
    from .parse import Mode

    if trials < 1:
        raise ValueError("trials must be >= 1")
    f_pat, theta_pat = as_pattern(problem.f), as_pattern(problem.theta)
    elim_var = elim_var or f_pat.variables[1]
    predicted = minding_degree(f_pat, theta_pat, elim_var).minding_degree

    records = []
    for i in range(trials):
        key = mix_key(seed, i)
        if problem.mode is Mode.CONCRETE:
            f, theta = problem.f, problem.theta
        else:
            f = sample_instance(f_pat, key, bound)
            theta = sample_instance(theta_pat, mix_key(key, 1), bound)
        res = resultant(f, theta, elim_var, method)
        observed = None if res.is_zero() else res.degree
        if observed is not None and observed > predicted:
            raise InternalInvariantViolation(
                f"observed resultant degree {observed} exceeds prediction {predicted}")
        records.append(Trial(key, observed, res.is_zero()))
    return VerificationResult(predicted, tuple(records))
