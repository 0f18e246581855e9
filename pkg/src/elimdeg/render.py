"""Text and JSON rendering of reports.

JSON never contains floats: integers are bare, other rationals are "p/q"
strings.  Keys are sorted, so output is byte-stable.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .degree import FINITE_COUNT_ASSUMPTION, DegreeReport, InfinityReport
from .oracle import VerificationResult
from .poly import UniPoly, format_rat

TEXT = "text"
JSON = "json"


def rat_json(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_json(p: UniPoly) -> list:
    return [rat_json(c) for c in p.coeffs]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def to_json_obj(r):
    """Plain JSON-ready dict for a report."""
    if isinstance(r, DegreeReport):
        return {
            "m": r.m,
            "n": r.n,
            "b": r.b,
            "edges": [{"h": rat_json(e.h), "multiplicity": e.multiplicity, "k": rat_json(e.k)}
                      for e in r.edge_contributions],
            "t": r.t_theta,
            "minding_degree": r.minding_degree,
            "bezout_bound": r.bezout_bound,
            "finck_degree": r.finck_degree,
        }
    if isinstance(r, InfinityReport):
        out = {
            "D_x": r.D_x,
            "D_y": r.D_y,
            "D_gen": r.D_gen,
            "lost_x": r.lost_x,
            "lost_y": r.lost_y,
            "finite_count": r.finite_count,
        }
        if r.gcd_lead_y_order is not None:
            out["gcd_lead_y_order"] = poly_json(r.gcd_lead_y_order)
        if r.gcd_lead_x_order is not None:
            out["gcd_lead_x_order"] = poly_json(r.gcd_lead_x_order)
        return out
    if isinstance(r, VerificationResult):
        return {
            "predicted": r.predicted,
            "trials": [{"id": t.id, "observed_degree": t.observed_degree, "zero": t.zero}
                       for t in r.trials],
            "agreement": rat_json(r.agreement_fraction),
        }
    raise TypeError(f"cannot render {type(r).__name__}")


def _text_degree(r: DegreeReport) -> list[str]:
    lines = [
        f"eliminate: {r.elim_var}",
        f"m: {r.m}",
        f"n: {r.n}",
        f"b: {r.b}",
    ]
    for e in r.edge_contributions:
        lines.append(f"root degree h = {format_rat(e.h)} (x{e.multiplicity}): k = {format_rat(e.k)}")
    if r.t_theta:
        lines.append(f"zero roots t: {r.t_theta} (contribution {r.t_contribution})")
    lines += [
        f"minding_degree: {r.minding_degree}",
        f"bezout_bound: {r.bezout_bound}",
        "finck_degree: " + ("n/a" if r.finck_degree is None else str(r.finck_degree)),
    ]
    return lines


def _text_infinity(r: InfinityReport) -> list[str]:
    x, y = r.variables
    lines = [
        f"degree eliminating {y} (equation in {x}): {r.D_x}",
        f"degree eliminating {x} (equation in {y}): {r.D_y}",
        f"degree after genericization: {r.D_gen}",
        f"solutions lost to {x} = infinity: {r.lost_x}",
        f"solutions lost to {y} = infinity: {r.lost_y}",
        f"finite solutions: {r.finite_count}",
    ]
    if r.gcd_lead_y_order is not None:
        lines.append(f"gcd of leading coefficients in {y}: {r.gcd_lead_y_order}")
    if r.gcd_lead_x_order is not None:
        lines.append(f"gcd of leading coefficients in {x}: {r.gcd_lead_x_order}")
    lines.append(f"note: {FINITE_COUNT_ASSUMPTION}")
    return lines


def _text_verification(r: VerificationResult) -> list[str]:
    lines = [f"predicted: {r.predicted}"]
    for t in r.trials:
        seen = "identically zero" if t.zero else str(t.observed_degree)
        lines.append(f"trial {t.id}: {seen}")
    lines.append(f"agreement: {format_rat(r.agreement_fraction)}")
    return lines


def render_report(r, fmt: str = TEXT) -> str:
    if fmt == JSON:
        return canonical_json(to_json_obj(r))
    if isinstance(r, DegreeReport):
        lines = _text_degree(r)
    elif isinstance(r, InfinityReport):
        lines = _text_infinity(r)
    elif isinstance(r, VerificationResult):
        lines = _text_verification(r)
    else:
        raise TypeError(f"cannot render {type(r).__name__}")
    return "\n".join(lines) + "\n"
