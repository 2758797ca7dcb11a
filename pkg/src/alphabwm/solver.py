"""Finite-grid minimax weight solver, interval weights and hierarchical composition.

For a fixed accuracy bound eps the residual constraints |num/den - a| <= eps,
with strictly positive denominators, are equivalent to the linear constraints
(a - eps) * den <= num <= (a + eps) * den in the 3n weight components. The
minimax problem is therefore solved globally by bisecting on eps with an LP
feasibility check at each step, and the GLB/LUB interval-weight programs are
plain LPs over the same polyhedron.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from .fuzzy import Interval, TriangularFuzzyNumber, alpha_cut, gmir
from .model import AlphaGrid, Fpcs

WEIGHT_FLOOR = 1e-9


class SolverError(RuntimeError):
    """Internal solver failure (no feasible point where one must exist)."""


@dataclass(frozen=True)
class SolverOptions:
    seed: int = 42
    optimality_tol: float = 5e-4
    max_starts: int = 32
    dense_eta_grid: int = 1001


@dataclass(frozen=True)
class WeightSet:
    weights: Tuple[TriangularFuzzyNumber, ...]

    @property
    def gmirs(self) -> List[float]:
        return [gmir(w) for w in self.weights]

    def normalized(self) -> "WeightSet":
        total = sum(self.gmirs)
        return WeightSet(tuple(
            TriangularFuzzyNumber(w.a / total, w.b / total, w.c / total)
            for w in self.weights))


@dataclass
class SolveReport:
    weights: WeightSet
    epsilon_star: float
    doa: float
    interval_weights: Optional[List[Interval]] = None
    midpoint_weights: Optional[List[float]] = None
    cr_upper: Optional[float] = None
    cr_conservative: Optional[float] = None


def _judgment_pairs(fpcs: Fpcs):
    """(numerator criterion, denominator criterion, judgment TFN) triples."""
    pairs = []
    for i in fpcs.others:
        pairs.append((fpcs.best, i, fpcs.best_to(i)))
    for i in fpcs.others:
        pairs.append((i, fpcs.worst, fpcs.to_worst(i)))
    pairs.append((fpcs.best, fpcs.worst, fpcs.best_to(fpcs.worst)))
    return pairs


def _cut_bounds(ws: WeightSet, alpha: float):
    lo = [(1.0 - alpha) * w.a + alpha * w.b for w in ws.weights]
    hi = [(1.0 - alpha) * w.c + alpha * w.b for w in ws.weights]
    return lo, hi


def residuals(ws: WeightSet, fpcs: Fpcs, alpha: float) -> List[float]:
    """The 4(n-2)+2 absolute residuals of the alpha-cut ratio equations.

    Order: for each non-best/worst criterion i, (lower best/i, upper best/i,
    lower i/worst, upper i/worst); then (lower best/worst, upper best/worst).
    """
    lo, hi = _cut_bounds(ws, alpha)
    b, w = fpcs.best, fpcs.worst

    def pair(p: int, q: int, judgment: TriangularFuzzyNumber):
        cut = alpha_cut(judgment, alpha)
        if hi[q] <= 0.0 or lo[q] <= 0.0:
            raise ZeroDivisionError(
                f"degenerate zero weight for criterion {fpcs.criteria[q]}")
        return [abs(lo[p] / hi[q] - cut.lo), abs(hi[p] / lo[q] - cut.hi)]

    out: List[float] = []
    for i in fpcs.others:
        out += pair(b, i, fpcs.best_to(i))
        out += pair(i, w, fpcs.to_worst(i))
    out += pair(b, w, fpcs.best_to(fpcs.worst))
    return out


def max_residual(ws: WeightSet, fpcs: Fpcs, alphas) -> float:
    return max(max(residuals(ws, fpcs, a)) for a in alphas)


class _LpProblem:
    """Linear constraint system in the 3n stacked components (l_0, m_0, u_0, ...)."""

    def __init__(self, fpcs: Fpcs, grid: AlphaGrid):
        self.fpcs = fpcs
        self.n = fpcs.n
        nv = 3 * self.n
        base_rows = []   # a*den - num  and  num - a*den
        den_rows = []    # den coefficient vector for each row
        for p, q, judgment in _judgment_pairs(fpcs):
            for alpha in grid.levels:
                cut = alpha_cut(judgment, alpha)
                num_lo = np.zeros(nv)
                num_lo[3 * p] = 1.0 - alpha
                num_lo[3 * p + 1] = alpha
                den_hi = np.zeros(nv)
                den_hi[3 * q + 2] = 1.0 - alpha
                den_hi[3 * q + 1] = alpha
                num_hi = np.zeros(nv)
                num_hi[3 * p + 2] = 1.0 - alpha
                num_hi[3 * p + 1] = alpha
                den_lo = np.zeros(nv)
                den_lo[3 * q] = 1.0 - alpha
                den_lo[3 * q + 1] = alpha
                # lower residual: (al - eps)*den_hi <= num_lo <= (al + eps)*den_hi
                base_rows.append(cut.lo * den_hi - num_lo); den_rows.append(den_hi)
                base_rows.append(num_lo - cut.lo * den_hi); den_rows.append(den_hi)
                # upper residual: (au - eps)*den_lo <= num_hi <= (au + eps)*den_lo
                base_rows.append(cut.hi * den_lo - num_hi); den_rows.append(den_lo)
                base_rows.append(num_hi - cut.hi * den_lo); den_rows.append(den_lo)
        self.base = np.array(base_rows)
        self.dens = np.array(den_rows)

        order_rows = []
        for q in range(self.n):
            row = np.zeros(nv); row[3 * q] = 1.0; row[3 * q + 1] = -1.0
            order_rows.append(row)
            row = np.zeros(nv); row[3 * q + 1] = 1.0; row[3 * q + 2] = -1.0
            order_rows.append(row)
        self.order = np.array(order_rows)

        norm = np.zeros(nv)
        for q in range(self.n):
            norm[3 * q] = 1.0 / 6.0
            norm[3 * q + 1] = 4.0 / 6.0
            norm[3 * q + 2] = 1.0 / 6.0
        self.norm = norm

    def _constraints(self, eps: float):
        a_ub = np.vstack([self.base - eps * self.dens, self.order])
        b_ub = np.zeros(a_ub.shape[0])
        return a_ub, b_ub

    def solve(self, eps: float, objective: Optional[np.ndarray] = None):
        """Solve an LP over the eps-feasible polyhedron; None if infeasible."""
        a_ub, b_ub = self._constraints(eps)
        c = objective if objective is not None else np.zeros(3 * self.n)
        res = linprog(c, A_ub=a_ub, b_ub=b_ub,
                      A_eq=self.norm[None, :], b_eq=[1.0],
                      bounds=(WEIGHT_FLOOR, None), method="highs")
        if not res.success:
            return None
        return res.x

    def gmir_objective(self, k: int) -> np.ndarray:
        c = np.zeros(3 * self.n)
        c[3 * k] = 1.0 / 6.0
        c[3 * k + 1] = 4.0 / 6.0
        c[3 * k + 2] = 1.0 / 6.0
        return c


def _to_weight_set(x: np.ndarray, n: int) -> WeightSet:
    weights = []
    for q in range(n):
        l, m, u = x[3 * q], x[3 * q + 1], x[3 * q + 2]
        l = max(l, 0.0)
        m = max(m, l)
        u = max(u, m)
        weights.append(TriangularFuzzyNumber(l, m, u))
    return WeightSet(tuple(weights)).normalized()


def solve_weights(fpcs: Fpcs, grid: AlphaGrid,
                  opts: SolverOptions = SolverOptions()) -> SolveReport:
    """Minimize the worst alpha-cut residual over the grid for TFN weights.

    Bisects on the accuracy bound; each trial bound gives a polyhedral
    feasibility problem decided exactly by an LP, so the returned value is the
    global optimum up to opts.optimality_tol.
    """
    problem = _LpProblem(fpcs, grid)
    bw_support_hi = alpha_cut(fpcs.best_to(fpcs.worst), 0.0).hi
    hi = max(bw_support_hi - 1.0, 0.0)

    x_hi = problem.solve(hi)
    while x_hi is None:
        # cannot happen for a valid scale system; widen defensively
        hi = 2.0 * hi + 1.0
        if hi > 1e6:
            raise SolverError("no feasible weight set found")
        x_hi = problem.solve(hi)

    lo = 0.0
    x_lo_feasible = problem.solve(lo)
    if x_lo_feasible is not None:
        x_hi, hi = x_lo_feasible, lo
    else:
        while hi - lo > opts.optimality_tol:
            mid = 0.5 * (lo + hi)
            x_mid = problem.solve(mid)
            if x_mid is None:
                lo = mid
            else:
                hi, x_hi = mid, x_mid

    ws = _to_weight_set(x_hi, fpcs.n)
    eps_star = float(max_residual(ws, fpcs, grid.levels))
    return SolveReport(weights=ws, epsilon_star=eps_star, doa=grid.mesh)


def interval_weights(fpcs: Fpcs, grid: AlphaGrid, epsilon_star: float,
                     k: int) -> Interval:
    """GLB/LUB of the defuzzified weight of criterion k over all weight sets
    whose grid residuals stay within epsilon_star (plus feasibility slack)."""
    problem = _LpProblem(fpcs, grid)
    eps = epsilon_star + 1e-8 * max(1.0, epsilon_star)
    c = problem.gmir_objective(k)
    x_min = problem.solve(eps, c)
    x_max = problem.solve(eps, -c)
    if x_min is None or x_max is None:
        raise SolverError(f"interval-weight program infeasible at eps={eps}")
    lo = float(c @ x_min)
    hi = float(c @ x_max)
    if lo > hi:  # numerically identical optima
        lo = hi = 0.5 * (lo + hi)
    return Interval(lo, hi)


def all_interval_weights(fpcs: Fpcs, grid: AlphaGrid,
                         epsilon_star: float) -> List[Interval]:
    problem = _LpProblem(fpcs, grid)
    eps = epsilon_star + 1e-8 * max(1.0, epsilon_star)
    out = []
    for k in range(fpcs.n):
        c = problem.gmir_objective(k)
        x_min = problem.solve(eps, c)
        x_max = problem.solve(eps, -c)
        if x_min is None or x_max is None:
            raise SolverError(f"interval-weight program infeasible at eps={eps}")
        lo, hi = float(c @ x_min), float(c @ x_max)
        if lo > hi:
            lo = hi = 0.5 * (lo + hi)
        out.append(Interval(lo, hi))
    return out


def midpoint_weights(intervals: List[Interval]) -> List[float]:
    return [0.5 * (iv.lo + iv.hi) for iv in intervals]


def solve_full(fpcs: Fpcs, grid: AlphaGrid,
               opts: SolverOptions = SolverOptions()) -> SolveReport:
    """solve_weights plus interval weights, midpoints and the CR upper bound."""
    from .consistency import cr_upper

    report = solve_weights(fpcs, grid, opts)
    report.interval_weights = all_interval_weights(fpcs, grid, report.epsilon_star)
    report.midpoint_weights = midpoint_weights(report.interval_weights)
    if not fpcs.degenerate:
        bounds = cr_upper(report.epsilon_star, report.doa, fpcs.best_worst_term)
        report.cr_upper = bounds["reported"]
        report.cr_conservative = bounds["conservative"]
    return report


def dense_eta(report: SolveReport, fpcs: Fpcs, points: int = 1001) -> float:
    """Max residual of the reported weights on a dense alpha grid."""
    return max_residual(report.weights, fpcs, np.linspace(0.0, 1.0, points))


# ---------------------------------------------------------------------------
# Brute-force oracle


def _batch_objective(cands: np.ndarray, pair_idx, pair_cuts, alphas) -> np.ndarray:
    """Worst residual per candidate; cands has shape (N, n, 3) sorted rows."""
    worst = np.zeros(cands.shape[0])
    for a_i, alpha in enumerate(alphas):
        lo = cands[:, :, 0] * (1.0 - alpha) + cands[:, :, 1] * alpha
        hi = cands[:, :, 2] * (1.0 - alpha) + cands[:, :, 1] * alpha
        for (p, q), (als, aus) in zip(pair_idx, pair_cuts):
            al, au = als[a_i], aus[a_i]
            r1 = np.abs(lo[:, p] / hi[:, q] - al)
            r2 = np.abs(hi[:, p] / lo[:, q] - au)
            np.maximum(worst, r1, out=worst)
            np.maximum(worst, r2, out=worst)
    return worst


def oracle_solve(fpcs: Fpcs, grid: AlphaGrid, resolution: float,
                 seed: int = 0, n_starts: int = 24,
                 return_weights: bool = False):
    """Independent brute-force check: multi-resolution grid search over the
    normalized TFN weight simplex, refining a 3^(3n) point stencil down to the
    requested resolution. Returns the minimal worst-residual found, which
    upper-bounds the true optimum by construction (every evaluated point is a
    feasible normalized weight set).
    """
    if fpcs.n > 4:
        raise ValueError(f"oracle guard: n={fpcs.n} exceeds the n<=4 search limit")

    alphas = grid.levels
    pair_idx, pair_cuts = [], []
    for p, q, judgment in _judgment_pairs(fpcs):
        cuts = [alpha_cut(judgment, a) for a in alphas]
        pair_idx.append((p, q))
        pair_cuts.append(([c.lo for c in cuts], [c.hi for c in cuts]))

    nv = 3 * fpcs.n
    offsets = np.array(list(itertools.product((-1.0, 0.0, 1.0), repeat=nv)))
    offsets = offsets.reshape(-1, fpcs.n, 3)

    rng = np.random.default_rng(seed)
    uniform = np.full((fpcs.n, 3), 1.0 / fpcs.n)
    starts = [uniform]
    for _ in range(n_starts - 1):
        starts.append(np.sort(uniform * rng.uniform(0.3, 2.5, size=(fpcs.n, 3)),
                              axis=1))

    def project(cands):
        # restrict the search to the normalized simplex; the objective is
        # scale-invariant, so this only removes the useless scaling direction
        cands = np.sort(np.clip(cands, 1e-6, None), axis=2)
        total = (cands[:, :, 0] + 4.0 * cands[:, :, 1]
                 + cands[:, :, 2]).sum(axis=1) / 6.0
        return cands / total[:, None, None]

    def descend(point, current):
        # repeated step schedules escape plateaus of the kinked max-residual
        # surface that a single coarse-to-fine sweep can stall on
        for _ in range(4):
            before = current
            step = 0.2
            iterations = 0
            while step >= resolution / 8.0 and iterations < 600:
                iterations += 1
                cands = project(point[None, :, :] + step * offsets)
                vals = _batch_objective(cands, pair_idx, pair_cuts, alphas)
                k = int(np.argmin(vals))
                if vals[k] < current - 1e-15:
                    point, current = cands[k], vals[k]
                else:
                    step *= 0.5
            if before - current < 1e-12:
                break
        return point, current

    best_val = np.inf
    best_point = None
    for start in starts:
        point = project(start[None, :, :])[0]
        current = _batch_objective(point[None, :, :], pair_idx, pair_cuts, alphas)[0]
        point, current = descend(point, current)
        if current < best_val:
            best_val, best_point = current, point

    if return_weights:
        ws = WeightSet(tuple(TriangularFuzzyNumber(*row) for row in best_point))
        return float(best_val), ws.normalized()
    return float(best_val)


# ---------------------------------------------------------------------------
# Hierarchical composition


class CompositionError(KeyError):
    """A parent criterion has no child weight block."""


def hierarchical_compose(parent: List[Tuple[str, float]],
                         children: Dict[str, List[Tuple[str, float]]]
                         ) -> List[Tuple[str, float]]:
    """Flatten a two-level weight tree into global child weights.

    Parent and child blocks are renormalized to unit sum before multiplying,
    so the flattened weights sum to 1 exactly.
    """
    parent_total = sum(w for _, w in parent)
    out = []
    for name, pw in parent:
        if name not in children:
            raise CompositionError(f"missing child weight block for {name!r}")
        block = children[name]
        block_total = sum(w for _, w in block)
        for child_name, cw in block:
            out.append((child_name, (pw / parent_total) * (cw / block_total)))
    return out


def rank(entries: List[Tuple[str, float]]):
    """Order entries by descending weight; ties keep input order and are flagged."""
    order = sorted(range(len(entries)), key=lambda i: (-entries[i][1], i))
    ranked = [entries[i] for i in order]
    weights = [w for _, w in ranked]
    has_ties = any(abs(a - b) <= 1e-12 for a, b in zip(weights, weights[1:]))
    return ranked, has_ties
