"""Exact univariate and bivariate polynomials over the rationals.

Rationals are :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator.  Polynomials are immutable values.

The zero polynomial has degree :data:`NEG_INFINITY`, so that
``deg(p*q) == deg(p) + deg(q)`` holds without special cases.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from .errors import DegenerateInput, ZeroDivisor

NEG_INFINITY = float("-inf")

Rat = Fraction


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# dense integer polynomials (lists, lowest degree first)
#
# These are the fast kernels behind gcd and the determinant backends.  They
# never hold trailing zeros; [] is the zero polynomial.
# ---------------------------------------------------------------------------

def ipoly_trim(a: list) -> list:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    if n != len(a):
        del a[n:]
    return a


def ipoly_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ipoly_trim(out)


def ipoly_sub(a: list, b: list) -> list:
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] -= c
    return ipoly_trim(out)


def ipoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return ipoly_trim(out)


def ipoly_scale(a: list, c) -> list:
    if not c:
        return []
    return [c * x for x in a]


def ipoly_exact_div(a: list, b: list) -> list:
    """Quotient of ``a`` by ``b`` when the division is known to be exact
    over the integers.  Raises ArithmeticError otherwise."""
    if not b:
        raise ZeroDivisor("division by the zero polynomial")
    if not a:
        return []
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c:
            qc, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            q[k] = qc
            for i, cb in enumerate(b):
                rem[k + i] -= qc * cb
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return ipoly_trim(q)


def ipoly_eval(a: list, x0):
    acc = 0
    for c in reversed(a):
        acc = acc * x0 + c
    return acc


def ipoly_content(a: list) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def ipoly_primitive(a: list) -> list:
    """Primitive part with a positive leading coefficient."""
    if not a:
        return []
    g = ipoly_content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def ipoly_prem(a: list, b: list) -> list:
    """Pseudo-remainder of ``a`` by ``b``: lc(b)^(da-db+1)*a mod b."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lead = b[-1]
    rem = list(a)
    for k in range(da - db, -1, -1):
        c = rem[k + db]
        rem = [lead * x for x in rem]
        if c:
            for i, cb in enumerate(b):
                rem[k + i] -= c * cb
        rem[k + db] = 0
    return ipoly_trim(rem[:db] if db > 0 else [])


def ipoly_gcd(a: list, b: list) -> list:
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    a, b = ipoly_primitive(a), ipoly_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, ipoly_primitive(ipoly_prem(a, b))
    return a


def rat_to_ipoly(coeffs) -> tuple[list, int]:
    """Clear denominators: returns (integer coefficients, common denominator)."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in coeffs], den


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial with rational coefficients, lowest degree first.

    >>> p = UniPoly([1, 0, 2], "x")
    >>> p.degree
    2
    >>> p(3)
    Fraction(19, 1)
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var: str = "x"):
        cs = [as_rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c, var: str = "x") -> UniPoly:
        return cls([c], var)

    @classmethod
    def monomial(cls, c, k: int, var: str = "x") -> UniPoly:
        return cls([0] * k + [c], var)

    @classmethod
    def from_ints(cls, coeffs, var: str = "x", den: int = 1) -> UniPoly:
        return cls([Fraction(c, den) for c in coeffs], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (
                self.var == other.var or len(self.coeffs) <= 1)
        if isinstance(other, (int, Rational)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.var != self.var and len(other.coeffs) > 1 and len(self.coeffs) > 1:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return UniPoly([other], self.var)

    def _var_with(self, other: UniPoly) -> str:
        return self.var if len(self.coeffs) > 1 or len(other.coeffs) <= 1 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self._var_with(other))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisor("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            return UniPoly((), self.var), self
        q = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            q[k] = c
            if c:
                for i, cb in enumerate(other.coeffs):
                    rem[k + i] -= c * cb
        var = self._var_with(other)
        return UniPoly(q, var), UniPoly(rem[:db], var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x0):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs], self.var)

    def with_var(self, var: str) -> UniPoly:
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, {self.var!r})"

    def __str__(self):
        return format_terms(
            ((k, c) for k, c in enumerate(self.coeffs)),
            lambda k: _power(self.var, k))


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def format_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms, monomial) -> str:
    """Human-readable sum, highest term first.  ``terms`` yields
    (key, coefficient) pairs; ``monomial(key)`` renders the power product."""
    parts = []
    for key, c in sorted(terms, key=lambda kc: kc[0], reverse=True):
        if not c:
            continue
        mono = monomial(key)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{format_rat(mag)}*{mono}"
        else:
            body = format_rat(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial ``sum c[i, j] * x^i * y^j``.

    ``variables`` is the ordered pair (x, y); by convention y is the variable
    eliminated by default.  Zero coefficients are never stored.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, terms=None, variables=("x", "y")):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            c = as_rat(c)
            if c:
                clean[(int(i), int(j))] = c
        x, y = variables
        if x == y:
            raise ValueError("variables must be distinct")
        object.__setattr__(self, "variables", (x, y))
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.variables == other.variables and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.variables, frozenset(self._terms.items()))))
        return self._hash

    def _check(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return BiPoly({(0, 0): other}, self.variables)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = BiPoly({(0, 0): 1}, self.variables)
        for _ in range(k):
            result = result * self
        return result

    def _axis(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"{var!r} is not a variable of {self.variables}") from None

    def degree_in(self, var: str):
        axis = self._axis(var)
        if not self._terms:
            return NEG_INFINITY
        return max(k[axis] for k in self._terms)

    @property
    def total_degree(self):
        if not self._terms:
            return NEG_INFINITY
        return max(i + j for i, j in self._terms)

    def coeffs_in(self, main_var: str) -> list[UniPoly]:
        """Coefficients with respect to ``main_var``, highest power first.

        Each entry is a :class:`UniPoly` in the other variable, so for
        ``f = A0*y^m + ... + Am`` this returns ``[A0, ..., Am]``.
        """
        if not self._terms:
            raise DegenerateInput("zero polynomial has no coefficient list")
        axis = self._axis(main_var)
        other = self.variables[1 - axis]
        deg = self.degree_in(main_var)
        buckets = [dict() for _ in range(deg + 1)]
        for k, c in self._terms.items():
            buckets[deg - k[axis]][k[1 - axis]] = c
        out = []
        for b in buckets:
            top = max(b, default=-1)
            out.append(UniPoly([b.get(e, 0) for e in range(top + 1)], other))
        return out

    @classmethod
    def from_coeffs(cls, coeffs, main_var: str, variables=("x", "y")) -> BiPoly:
        """Inverse of :meth:`coeffs_in`."""
        axis = variables.index(main_var)
        deg = len(coeffs) - 1
        terms = {}
        for idx, u in enumerate(coeffs):
            for e, c in enumerate(u.coeffs):
                key = [0, 0]
                key[axis] = deg - idx
                key[1 - axis] = e
                terms[tuple(key)] = c
        return cls(terms, variables)

    def substitute(self, var: str, value) -> UniPoly:
        """Set ``var := value`` and return a polynomial in the other variable."""
        axis = self._axis(var)
        other = self.variables[1 - axis]
        value = as_rat(value)
        acc: dict[int, Fraction] = {}
        for k, c in self._terms.items():
            e = k[1 - axis]
            acc[e] = acc.get(e, 0) + c * value ** k[axis]
        top = max(acc, default=-1)
        return UniPoly([acc.get(e, 0) for e in range(top + 1)], other)

    def transposed(self) -> BiPoly:
        """Same polynomial with the roles of the two variables swapped."""
        x, y = self.variables
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()}, (y, x))

    def __repr__(self):
        return f"BiPoly({str(self)!r}, variables={self.variables})"

    def __str__(self):
        x, y = self.variables

        def mono(k):
            return "*".join(p for p in (_power(x, k[0]), _power(y, k[1])) if p)

        # highest y-power first, then highest x-power
        return format_terms(
            (((j, i), c) for (i, j), c in self._terms.items()),
            lambda key: mono((key[1], key[0])))


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

def coeffs_in(p: BiPoly, main_var: str) -> list[UniPoly]:
    return p.coeffs_in(main_var)


def degree_in(p, var: str):
    if isinstance(p, UniPoly):
        if var != p.var and p.degree > 0:
            raise ValueError(f"{var!r} is not the variable of {p!r}")
        return p.degree if var == p.var else (0 if p.coeffs else NEG_INFINITY)
    return p.degree_in(var)


def eval_x(p: BiPoly, x0) -> UniPoly:
    return p.substitute(p.variables[0], x0)


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; ``uni_gcd(0, 0)`` is the zero polynomial."""
    var = p.var if p.degree > 0 else q.var
    if not p.coeffs and not q.coeffs:
        return UniPoly((), var)
    a, _ = rat_to_ipoly(p.coeffs)
    b, _ = rat_to_ipoly(q.coeffs)
    g = ipoly_gcd(a, b)
    return UniPoly.from_ints(g, var).monic()


def uni_divides(d: UniPoly, p: UniPoly) -> bool:
    if not d.coeffs:
        raise ZeroDivisor("divisor is the zero polynomial")
    return divmod(p, d)[1].is_zero()
