"""Exit criteria.  Each test is one criterion; a PASS/FAIL line per
criterion is printed in the terminal summary."""
import random
import time
from fractions import Fraction

import pytest

from elimdeg import (BiPoly, DegenerateInput, Method, MixedVariables, Mode, PatternPoly, PolySyntaxError,
                     ProblemSpec, dual_order_analysis, finck_degree, format_problem,
                     minding_degree, order_swap_check, parse_problem, resultant, root_degrees,
                     sample_instance, uni_divides, verify_degree)
from elimdeg.degree import leading_gcd

from conftest import (EX1_F, EX1_THETA, EX2_F_DEGENERATE, EX2_F_GENERIC, EX2_THETA,
                      random_pattern)

F = Fraction


@pytest.mark.acceptance(1, "example 1: degree 58, Bezout 78, root and factor degrees")
def test_example1_regression():
    start = time.perf_counter()
    r = minding_degree(EX1_F, EX1_THETA, "y")
    s = root_degrees(EX1_THETA)
    elapsed = time.perf_counter() - start

    assert r.minding_degree == 58
    assert r.bezout_bound == 78
    assert sorted(s.root_degrees) == [(F(-5, 3), 3), (F(1, 2), 2)]
    assert sorted((e.k, e.multiplicity) for e in r.edge_contributions) == [(F(5), 3), (F(11, 2), 2)]
    assert (r.b, r.m) == (8, 4)
    assert elapsed < 0.1


@pytest.mark.acceptance(2, "example 1 oracle: 20 trials observe degree 58")
def test_example1_oracle():
    start = time.perf_counter()
    r = verify_degree(ProblemSpec(EX1_F, EX1_THETA, Mode.PATTERN), "y",
                      trials=20, seed=0, bound=10**6)
    elapsed = time.perf_counter() - start

    assert r.predicted == 58
    assert r.agreement_fraction >= F(95, 100)
    assert all(not t.zero and t.observed_degree <= 58 for t in r.trials)
    assert r.max_observed == 58
    assert elapsed < 30


@pytest.mark.acceptance(3, "example 2: 26 / 25 / 24, 23 finite, gcds x^2 and y")
def test_example2_regression():
    start = time.perf_counter()
    assert minding_degree(EX2_F_GENERIC, EX2_THETA, "y").minding_degree == 26
    assert minding_degree(EX2_F_GENERIC, EX2_THETA, "x").minding_degree == 26
    assert minding_degree(EX2_F_DEGENERATE, EX2_THETA, "y").minding_degree == 25
    assert minding_degree(EX2_F_DEGENERATE, EX2_THETA, "x").minding_degree == 24

    f = sample_instance(EX2_F_DEGENERATE, 1, 10**6)
    theta = sample_instance(EX2_THETA, 2, 10**6)
    inf = dual_order_analysis(EX2_F_DEGENERATE, EX2_THETA, concrete=(f, theta))
    assert (inf.D_gen, inf.lost_x, inf.lost_y, inf.finite_count) == (26, 1, 2, 23)

    g_y, g_x = leading_gcd(f, theta, "y"), leading_gcd(f, theta, "x")
    assert g_y.coeffs == (0, 0, 1) and g_y.var == "x"
    assert g_x.coeffs == (0, 1) and g_x.var == "y"
    assert inf.gcd_lead_y_order == g_y and inf.gcd_lead_x_order == g_x
    res_x = resultant(f, theta, "y")
    res_y = resultant(f, theta, "x")
    assert res_x.degree == 25 and res_y.degree == 24
    assert uni_divides(g_y, res_x)
    assert uni_divides(g_x, res_y)
    assert time.perf_counter() - start < 5


@pytest.mark.acceptance(4, "Finck rule equals the Minding degree on 200+ dense uniform patterns")
def test_finck_consistency():
    rng = random.Random(404)
    for _ in range(250):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        mp, np_ = rng.randint(0, 4), rng.randint(0, 4)
        f = PatternPoly.dense({j: mp for j in range(m + 1)})
        theta = PatternPoly.dense({j: np_ for j in range(n + 1)})
        expected = m * np_ + n * mp
        assert finck_degree(f, theta) == expected
        assert minding_degree(f, theta, "y").minding_degree == expected


@pytest.mark.acceptance(5, "integrality and Bezout bound on 1000+ sparse patterns")
def test_integrality_and_bound():
    rng = random.Random(505)
    checked = 0
    while checked < 1200:
        f = random_pattern(rng, rng.randint(1, 6), rng.randint(0, 8), rng.uniform(0.15, 0.7))
        theta = random_pattern(rng, rng.randint(1, 6), rng.randint(0, 8), rng.uniform(0.15, 0.7))
        for elim in ("y", "x"):
            try:
                r = minding_degree(f, theta, elim)
            except DegenerateInput:
                continue
            assert isinstance(r.minding_degree, int)
            total = r.m * r.b + r.t_contribution + sum(e.multiplicity * e.k
                                                       for e in r.edge_contributions)
            assert total.denominator == 1 and total == r.minding_degree
            assert 0 <= r.minding_degree <= r.bezout_bound
            checked += 1


@pytest.mark.acceptance(6, "oracle equivalence on 200+ small patterns, backends, sign law")
def test_oracle_equivalence():
    rng = random.Random(606)
    start = time.perf_counter()
    instances = hits = 0
    while instances < 220:
        f = random_pattern(rng, rng.randint(1, 3), 3, rng.uniform(0.3, 0.8))
        theta = random_pattern(rng, rng.randint(1, 3), 3, rng.uniform(0.3, 0.8))
        try:
            predicted = minding_degree(f, theta, "y").minding_degree
        except DegenerateInput:
            continue
        cf = sample_instance(f, 2 * instances, 10**6)
        ct = sample_instance(theta, 2 * instances + 1, 10**6)
        a = resultant(cf, ct, "y", Method.INTERP)
        b = resultant(cf, ct, "y", Method.FRACTION_FREE)
        assert a == b
        assert not a.is_zero() and a.degree <= predicted
        assert order_swap_check(cf, ct, "y")
        hits += a.degree == predicted
        instances += 1
    assert Fraction(hits, instances) >= Fraction(95, 100)
    assert time.perf_counter() - start < 120


MALFORMED = [
    "f = y +\ntheta = y", "f = y\ntheta = y^-1", "f = y\ntheta = x y", "f == y\ntheta = y",
    "theta = y", "f = y\ntheta = (x^2", "f = y\ntheta = 3/", "f = y\ntheta = y\n+",
    "f = #*\ntheta = y", "g = y\ntheta = y", "f = y\ntheta = y ^ x", "f = y ²\ntheta = y",
]


@pytest.mark.acceptance(7, "parser round trip on 500 specs; malformed input gives positioned errors")
def test_parser_round_trip():
    rng = random.Random(707)
    for k in range(500):
        if k % 2:
            spec = ProblemSpec(random_pattern(rng, 5, 6, 0.5), random_pattern(rng, 5, 6, 0.5),
                               Mode.PATTERN)
        else:
            spec = ProblemSpec(_concrete(rng), _concrete(rng), Mode.CONCRETE)
        assert parse_problem(format_problem(spec)) == spec

    for text in MALFORMED:
        with pytest.raises(PolySyntaxError) as info:
            parse_problem(text)
        assert 0 <= info.value.pos <= len(text)
    for _ in range(500):
        text = _mutate(format_problem(ProblemSpec(_concrete(rng), _concrete(rng), Mode.CONCRETE)), rng)
        try:
            parse_problem(text)
        except PolySyntaxError as exc:
            assert 0 <= exc.pos <= len(text)
        except (DegenerateInput, MixedVariables):
            pass


def _concrete(rng):
    while True:
        p = BiPoly({(rng.randint(0, 5), rng.randint(0, 4)): F(rng.randint(-30, 30), rng.randint(1, 9))
                    for _ in range(rng.randint(1, 8))})
        if not p.is_zero() and p.degree_in("y") >= 1:
            return p


def _mutate(text, rng):
    chars = list(text)
    for _ in range(rng.randint(1, 3)):
        pos = rng.randrange(len(chars) + 1)
        op = rng.random()
        if op < 0.4 and chars:
            del chars[min(pos, len(chars) - 1)]
        else:
            chars.insert(pos, rng.choice("+-*^/()#=xyz0123 \n"))
    return "".join(chars)
