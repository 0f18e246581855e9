"""Generic-coefficient polynomial shapes.

A pattern records only *where* a polynomial has coefficients: each monomial
in the support carries an independent, symbolically nonzero coefficient.
``(x^3)*y^2`` in a problem file is the dense pattern {x^0..x^3} times y^2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInput
from .poly import NEG_INFINITY, BiPoly


@dataclass(frozen=True)
class PatternPoly:
    support: frozenset
    variables: tuple = ("x", "y")

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset((int(i), int(j)) for i, j in self.support))
        object.__setattr__(self, "variables", tuple(self.variables))
        if any(i < 0 or j < 0 for i, j in self.support):
            raise ValueError("negative exponent in pattern support")

    @classmethod
    def from_sets(cls, sets: dict, variables=("x", "y")) -> PatternPoly:
        """Build from ``{y-exponent j: x-exponents}``; empty sets are dropped."""
        return cls(frozenset((i, j) for j, xs in sets.items() for i in xs), variables)

    @classmethod
    def dense(cls, degrees: dict, variables=("x", "y")) -> PatternPoly:
        """``{j: d}`` -> coefficient of y^j is a full polynomial of degree d."""
        return cls.from_sets({j: range(d + 1) for j, d in degrees.items()}, variables)

    @property
    def support_sets(self) -> dict:
        """``{j: frozenset of x-exponents}`` ordered by the second variable."""
        return self.coefficient_supports(self.variables[1])

    def coefficient_supports(self, main_var: str) -> dict:
        axis = self._axis(main_var)
        out: dict = {}
        for k in self.support:
            out.setdefault(k[axis], set()).add(k[1 - axis])
        return {j: frozenset(s) for j, s in sorted(out.items())}

    def _axis(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"{var!r} is not a variable of {self.variables}") from None

    def is_zero(self) -> bool:
        return not self.support

    def degree_in(self, var: str):
        axis = self._axis(var)
        return max((k[axis] for k in self.support), default=NEG_INFINITY)

    @property
    def total_degree(self):
        return max((i + j for i, j in self.support), default=NEG_INFINITY)

    def leading_support(self, main_var: str) -> frozenset:
        """Support of the leading coefficient with respect to ``main_var``."""
        sets = self.coefficient_supports(main_var)
        if not sets:
            raise DegenerateInput("empty pattern")
        return sets[max(sets)]

    def transposed(self) -> PatternPoly:
        x, y = self.variables
        return PatternPoly(frozenset((j, i) for i, j in self.support), (y, x))

    def oriented(self, elim_var: str) -> PatternPoly:
        """Return a pattern whose second variable is ``elim_var``."""
        return self if self.variables[1] == elim_var else self.transposed()

    def with_monomials(self, *monomials) -> PatternPoly:
        return PatternPoly(self.support | frozenset(monomials), self.variables)

    def __str__(self):
        x, y = self.variables
        parts = []
        for j, xs in sorted(self.support_sets.items(), reverse=True):
            parts.append(f"{{{', '.join(str(i) for i in sorted(xs))}}}*{y}^{j}")
        return " + ".join(parts) if parts else "0"


def pattern_of(p: BiPoly) -> PatternPoly:
    """Support pattern of a concrete polynomial."""
    if p.is_zero():
        raise DegenerateInput("zero polynomial has no pattern")
    return PatternPoly(p.support, p.variables)


def as_pattern(p) -> PatternPoly:
    return p if isinstance(p, PatternPoly) else pattern_of(p)
