"""Consistency-value case analysis, CI lower bounds and CR upper bounds.

Each consistency value is the smallest judgment perturbation that repairs one
violated necessary condition. Pair and quadratic cases have closed forms; the
quartic and cubic cases are solved by scanning for the smallest positive root
and polishing it with Brent's method.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from scipy.optimize import brentq

from .fuzzy import alpha_cut
from .model import SCALE, AlphaGrid, Fpcs

_SCAN_STEP = 1e-3
_ROOT_XTOL = 1e-15
_EQ_TOL = 1e-9


class UndefinedCIError(ValueError):
    """CI has no table row for an equally-preferable best/worst judgment."""


def _smallest_positive_root(fn: Callable[[float], float], hi: float) -> float:
    """Smallest positive root of fn on (0, hi), isolated by a fixed-step scan.

    fn must accept numpy arrays; the scan is evaluated in one vectorized call.
    """
    import numpy as np

    xs = np.append(np.arange(0.0, hi, _SCAN_STEP), hi * (1.0 - 1e-12))
    vs = fn(xs)
    if vs[0] == 0.0:
        return 0.0
    signs = np.sign(vs)
    flips = np.nonzero(signs != signs[0])[0]
    if flips.size == 0:
        raise ArithmeticError("no sign change found inside the root bracket")
    k = int(flips[0])
    if vs[k] == 0.0:
        return float(xs[k])
    return float(brentq(fn, xs[k - 1], xs[k], xtol=_ROOT_XTOL))


def cv_pair(p1: float, q1: float, p2: float, q2: float) -> float:
    """Perturbation equalizing two products: (p1+x)(q1+x) = (p2-x)(q2-x).

    Returns 0 when the products already agree; symmetric in the two pairs.
    """
    if min(p1, q1, p2, q2) <= 0.0:
        raise ValueError("cv_pair requires strictly positive inputs")
    if p1 * q1 > p2 * q2:
        p1, q1, p2, q2 = p2, q2, p1, q1
    if p1 * q1 == p2 * q2:
        return 0.0
    return (p2 * q2 - p1 * q1) / (p1 + q1 + p2 + q2)


def cv_quadratic(p: float, q: float, r: float) -> float:
    """Smallest positive root of (p-x)(q-x) = r+x; 0 when p*q <= r."""
    if p * q <= r:
        return 0.0
    disc = (p + q + 1.0) ** 2 - 4.0 * (p * q - r)
    return (p + q + 1.0 - disc ** 0.5) / 2.0


def cv_quartic_over(a: float, b: float, c: float, d: float,
                    e: float, f: float) -> float:
    """Smallest positive root of (a-x)(b-x)(c-x)(d-x) = (e+x)(f+x); 0 if abcd <= ef."""
    if a * b * c * d <= e * f:
        return 0.0
    hi = min(a, b, c, d)
    return _smallest_positive_root(
        lambda x: (a - x) * (b - x) * (c - x) * (d - x) - (e + x) * (f + x), hi)


def cv_quartic_under(a: float, b: float, c: float, d: float,
                     e: float, f: float) -> float:
    """Smallest positive root of (a+x)(b+x)(c+x)(d+x) = (e-x)(f-x); 0 if abcd >= ef."""
    if a * b * c * d >= e * f:
        return 0.0
    hi = min(e, f)
    return _smallest_positive_root(
        lambda x: (a + x) * (b + x) * (c + x) * (d + x) - (e - x) * (f - x), hi)


def cv_monotonicity(lhs_terms: Tuple[float, float, float],
                    rhs_terms: Tuple[float, float, float]) -> float:
    """Smallest positive root of prod(lhs+x) = prod(rhs-x); 0 if no violation.

    A violation means the left product is strictly smaller at x = 0.
    """
    l1, l2, l3 = lhs_terms
    r1, r2, r3 = rhs_terms
    if l1 * l2 * l3 >= r1 * r2 * r3:
        return 0.0
    hi = min(r1, r2, r3)
    return _smallest_positive_root(
        lambda x: (l1 + x) * (l2 + x) * (l3 + x)
        - (r1 - x) * (r2 - x) * (r3 - x), hi)


def ci_lower_bound(term: str) -> float:
    """Largest consistency value achievable for a given best-to-worst label.

    Computed live as the max over the per-case maxima at full membership, plus
    the universal 0.5 bound of the monotonicity cases.
    """
    if term == "1":
        raise UndefinedCIError(
            "CI is undefined when best and worst are judged equally preferable")
    a = SCALE[term].b
    return max(cv_pair(1.0, 1.0, a, a),
               cv_quadratic(a, a, a),
               cv_quartic_under(1.0, 1.0, 1.0, 1.0, a, a),
               0.5)


def ci_table() -> List[dict]:
    """All eight CI rows (labels '2'..'9') with the per-case maxima, computed live."""
    rows = []
    for term in "23456789":
        a = SCALE[term].b
        rows.append({
            "label": term,
            "pair_cv": cv_pair(1.0, 1.0, a, a),
            "quadratic_cv": cv_quadratic(a, a, a),
            "under_cv": cv_quartic_under(1.0, 1.0, 1.0, 1.0, a, a),
            "monotonicity_bound": 0.5,
            "ci_lower": ci_lower_bound(term),
        })
    return rows


def cr_upper(epsilon_star: float, doa: float, a_bw: str) -> Dict[str, float]:
    """Upper bounds on the consistency ratio from the CI lower bound.

    reported uses the finite-grid optimum alone; conservative adds the grid
    mesh to cover the dense-grid residual.
    """
    ci = ci_lower_bound(a_bw)
    return {"reported": epsilon_star / ci,
            "conservative": (epsilon_star + doa) / ci}


@dataclass
class Violation:
    case: int
    indices: Tuple[int, ...]
    alpha: Tuple[float, ...]
    cv: float

    def to_dict(self) -> dict:
        return {"case": self.case, "indices": list(self.indices),
                "alpha": list(self.alpha), "cv": self.cv}


@dataclass
class ConsistencyReport:
    violations: List[Violation]
    k1_profile: Dict[float, Optional[float]]
    k2_profile: Dict[float, Optional[float]]
    max_cv: float
    ci_lower: Optional[float] = None
    cr_upper: Optional[float] = None
    cr_conservative: Optional[float] = None
    epsilon_star: Optional[float] = None
    doa: Optional[float] = None

    @property
    def consistent(self) -> bool:
        return not self.violations


def check_conditions(fpcs: Fpcs, alpha_grid: AlphaGrid,
                     epsilon_star: Optional[float] = None,
                     doa: Optional[float] = None) -> ConsistencyReport:
    """Evaluate the nine necessary consistency conditions on the grid.

    Every violation carries the consistency value of its matching case; the
    overall max_cv is a lower bound on the achievable minimax accuracy. CR
    bounds are filled when epsilon_star (and optionally doa) are supplied and
    the best-to-worst judgment is not degenerate.
    """
    levels = alpha_grid.levels
    others = fpcs.others
    violations: List[Violation] = []

    def bi(i: int, alpha: float):
        return alpha_cut(fpcs.best_to(i), alpha)

    def iw(i: int, alpha: float):
        return alpha_cut(fpcs.to_worst(i), alpha)

    def bw(alpha: float):
        return alpha_cut(fpcs.best_to(fpcs.worst), alpha)

    # Cases 1 and 2: the products a_bi^l * a_iw^u and a_bi^u * a_iw^l must be
    # a common value across i at every alpha.
    k1_profile: Dict[float, Optional[float]] = {}
    k2_profile: Dict[float, Optional[float]] = {}
    for alpha in levels:
        prods1 = [(i, bi(i, alpha).lo * iw(i, alpha).hi) for i in others]
        prods2 = [(i, bi(i, alpha).hi * iw(i, alpha).lo) for i in others]
        for case, prods, profile in ((1, prods1, k1_profile),
                                     (2, prods2, k2_profile)):
            constant = True
            for (i1, v1), (i2, v2) in zip(prods, prods[1:]):
                if abs(v1 - v2) > _EQ_TOL:
                    constant = False
            if prods:
                profile[alpha] = prods[0][1] if constant else None
            for a_i in range(len(prods)):
                for b_i in range(a_i + 1, len(prods)):
                    i1, v1 = prods[a_i]
                    i2, v2 = prods[b_i]
                    if abs(v1 - v2) <= _EQ_TOL:
                        continue
                    if case == 1:
                        cv = cv_pair(bi(i1, alpha).lo, iw(i1, alpha).hi,
                                     bi(i2, alpha).lo, iw(i2, alpha).hi)
                    else:
                        cv = cv_pair(bi(i1, alpha).hi, iw(i1, alpha).lo,
                                     bi(i2, alpha).hi, iw(i2, alpha).lo)
                    violations.append(Violation(case, (i1, i2), (alpha,), cv))

    # Case 3: the four-way product must match a_bw^l * a_bw^u.
    for alpha in levels:
        bw_cut = bw(alpha)
        rhs = bw_cut.lo * bw_cut.hi
        for i1 in others:
            for i2 in others:
                t1 = bi(i1, alpha).lo
                t2 = iw(i1, alpha).hi
                t3 = bi(i2, alpha).hi
                t4 = iw(i2, alpha).lo
                lhs = t1 * t2 * t3 * t4
                if lhs > rhs + _EQ_TOL:
                    cv = cv_quartic_over(t1, t2, t3, t4, bw_cut.lo, bw_cut.hi)
                    violations.append(Violation(3, (i1, i2), (alpha,), cv))
                elif lhs < rhs - _EQ_TOL:
                    cv = cv_quartic_under(t1, t2, t3, t4, bw_cut.lo, bw_cut.hi)
                    violations.append(Violation(3, (i1, i2), (alpha,), cv))

    # Cases 4, 5, 6: per-criterion product ceilings.
    for alpha in levels:
        bw_cut = bw(alpha)
        for i in others:
            p4 = (bi(i, alpha).lo, iw(i, alpha).hi, bw_cut.hi)
            p5 = (bi(i, alpha).hi, iw(i, alpha).lo, bw_cut.hi)
            p6 = (bi(i, alpha).lo, iw(i, alpha).lo, bw_cut.lo)
            for case, (p, q, r) in ((4, p4), (5, p5), (6, p6)):
                if p * q > r + _EQ_TOL:
                    violations.append(
                        Violation(case, (i,), (alpha,), cv_quadratic(p, q, r)))

    # Cases 7, 8, 9: f, g, h must not decrease between successive grid levels.
    for a1, a2 in zip(levels, levels[1:]):
        bw1, bw2 = bw(a1), bw(a2)
        for i in others:
            configs = (
                (7, (bi(i, a2).lo, iw(i, a2).hi, bw1.hi),
                    (bi(i, a1).lo, iw(i, a1).hi, bw2.hi)),
                (8, (bi(i, a2).hi, iw(i, a2).lo, bw1.hi),
                    (bi(i, a1).hi, iw(i, a1).lo, bw2.hi)),
                (9, (bi(i, a2).lo, iw(i, a2).lo, bw1.lo),
                    (bi(i, a1).lo, iw(i, a1).lo, bw2.lo)),
            )
            for case, lhs, rhs in configs:
                # f(a2) >= f(a1) iff lhs product >= rhs product
                if lhs[0] * lhs[1] * lhs[2] < rhs[0] * rhs[1] * rhs[2] * (1 - 1e-12):
                    violations.append(
                        Violation(case, (i,), (a1, a2), cv_monotonicity(lhs, rhs)))

    max_cv = max((v.cv for v in violations), default=0.0)
    report = ConsistencyReport(violations=violations,
                               k1_profile=k1_profile, k2_profile=k2_profile,
                               max_cv=max_cv,
                               epsilon_star=epsilon_star, doa=doa)
    if not fpcs.degenerate:
        report.ci_lower = ci_lower_bound(fpcs.best_worst_term)
        if epsilon_star is not None:
            bounds = cr_upper(epsilon_star, doa if doa is not None else 0.0,
                              fpcs.best_worst_term)
            report.cr_upper = bounds["reported"]
            report.cr_conservative = bounds["conservative"]
    return report
