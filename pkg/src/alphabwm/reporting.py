"""Shared report assembly: the CLI JSON output and the HTTP API return the
same documents, built here from solver and consistency results."""

from __future__ import annotations

from typing import List, Optional, Union

from .consistency import ConsistencyReport, check_conditions
from .model import AlphaGrid, Fpcs, Hierarchy
from .solver import (SolveReport, SolverOptions, hierarchical_compose, rank,
                     solve_full)


def _flat_payload(fpcs: Fpcs, grid: AlphaGrid, report: SolveReport) -> dict:
    return {
        "criteria": list(fpcs.criteria),
        "grid": list(grid.levels),
        "doa": report.doa,
        "epsilon_star": report.epsilon_star,
        "cr_upper": report.cr_upper,
        "cr_conservative": report.cr_conservative,
        "weights": [
            {
                "criterion": name,
                "tfn": [w.a, w.b, w.c],
                "interval": [iv.lo, iv.hi],
                "average": mid,
            }
            for name, w, iv, mid in zip(fpcs.criteria, report.weights.weights,
                                        report.interval_weights,
                                        report.midpoint_weights)
        ],
    }


def solve_payload(system: Union[Fpcs, Hierarchy], grid: AlphaGrid,
                  opts: SolverOptions = SolverOptions()) -> dict:
    """Full-precision solve document for an Fpcs or a two-level hierarchy."""
    if isinstance(system, Fpcs):
        return _flat_payload(system, grid, solve_full(system, grid, opts))

    root_report = solve_full(system.root, grid, opts)
    payload = {"root": _flat_payload(system.root, grid, root_report),
               "children": {}}
    parent = list(zip(system.root.criteria, root_report.midpoint_weights))
    children = {}
    for name in system.root.criteria:
        child = system.children[name]
        child_report = solve_full(child, grid, opts)
        payload["children"][name] = _flat_payload(child, grid, child_report)
        children[name] = list(zip(child.criteria, child_report.midpoint_weights))
    global_weights = hierarchical_compose(parent, children)
    ranked, ties = rank(global_weights)
    positions = {name: pos + 1 for pos, (name, _) in enumerate(ranked)}
    payload["global_weights"] = [
        {"criterion": name, "weight": weight, "rank": positions[name]}
        for name, weight in global_weights
    ]
    payload["has_ties"] = ties
    return payload


def consistency_payload(fpcs: Fpcs, grid: AlphaGrid,
                        threshold: Optional[float] = None,
                        opts: SolverOptions = SolverOptions()) -> dict:
    """Consistency document: condition check plus solver-backed CR bounds."""
    from .solver import solve_weights

    solve_report = solve_weights(fpcs, grid, opts)
    report = check_conditions(fpcs, grid, solve_report.epsilon_star,
                              solve_report.doa)
    payload = {
        "criteria": list(fpcs.criteria),
        "grid": list(grid.levels),
        "epsilon_star": report.epsilon_star,
        "doa": report.doa,
        "max_cv": report.max_cv,
        "ci_lower": report.ci_lower,
        "cr_upper": report.cr_upper,
        "cr_conservative": report.cr_conservative,
        "consistent": report.consistent,
        "violations": [v.to_dict() for v in report.violations],
        "k1_profile": [[alpha, value] for alpha, value in report.k1_profile.items()],
        "k2_profile": [[alpha, value] for alpha, value in report.k2_profile.items()],
    }
    if threshold is not None:
        payload["threshold"] = threshold
        payload["acceptable"] = bool(report.cr_upper is not None
                                     and report.cr_upper <= threshold)
    return payload


# ---------------------------------------------------------------------------
# Plain-text tables (4 decimals, mirroring the JSON fields)


def _flat_table(payload: dict) -> List[str]:
    lines = [f"{'criterion':<12}{'interval':<22}{'average':>8}"]
    for row in payload["weights"]:
        lo, hi = row["interval"]
        lines.append(f"{row['criterion']:<12}"
                     f"[{lo:.4f}, {hi:.4f}]{'':<4}{row['average']:>8.4f}")
    lines.append(f"epsilon_star  {payload['epsilon_star']:.4f}")
    lines.append(f"doa           {payload['doa']:.4f}")
    if payload["cr_upper"] is not None:
        lines.append(f"cr_upper      {payload['cr_upper']:.4f}")
    else:
        lines.append("cr_upper      undefined (best equals worst judgment)")
    return lines


def solve_table(payload: dict) -> str:
    if "root" not in payload:
        return "\n".join(_flat_table(payload))
    lines = ["== root =="]
    lines += _flat_table(payload["root"])
    for name, child in payload["children"].items():
        lines.append(f"== {name} ==")
        lines += _flat_table(child)
    lines.append("== global weights ==")
    lines.append(f"{'rank':<6}{'criterion':<12}{'weight':>8}")
    ordered = sorted(payload["global_weights"], key=lambda r: r["rank"])
    for row in ordered:
        lines.append(f"{row['rank']:<6}{row['criterion']:<12}{row['weight']:>8.4f}")
    if payload["has_ties"]:
        lines.append("note: tied weights present; ties keep input order")
    return "\n".join(lines)


def consistency_table(payload: dict) -> str:
    lines = [f"epsilon_star  {payload['epsilon_star']:.4f}",
             f"doa           {payload['doa']:.4f}",
             f"max_cv        {payload['max_cv']:.4f}"]
    if payload["ci_lower"] is not None:
        lines.append(f"ci_lower      {payload['ci_lower']:.4f}")
        lines.append(f"cr_upper      {payload['cr_upper']:.4f}")
        lines.append(f"cr_conservative  {payload['cr_conservative']:.4f}")
    else:
        lines.append("ci_lower      undefined (best equals worst judgment)")
    if "threshold" in payload:
        verdict = "acceptable" if payload["acceptable"] else "not acceptable"
        lines.append(f"threshold     {payload['threshold']:.4f} -> {verdict}")
    if payload["consistent"]:
        lines.append("no necessary-condition violation detected")
    else:
        lines.append(f"violations    {len(payload['violations'])}")
        for v in payload["violations"][:20]:
            idx = ",".join(str(i) for i in v["indices"])
            alphas = ",".join(f"{a:.4f}" for a in v["alpha"])
            lines.append(f"  case {v['case']}  i=({idx})  alpha=({alphas})"
                         f"  cv={v['cv']:.4f}")
        if len(payload["violations"]) > 20:
            lines.append(f"  ... {len(payload['violations']) - 20} more")
    return "\n".join(lines)


def ci_table_text(rows: List[dict]) -> str:
    lines = [f"{'term':<6}{'cases 1-2':>10}{'cases 3.1/4-6':>14}"
             f"{'case 3.2':>10}{'cases 7-9':>10}{'ci_lower':>10}"]
    for row in rows:
        lines.append(f"{row['label']:<6}{row['pair_cv']:>10.4f}"
                     f"{row['quadratic_cv']:>14.4f}{row['under_cv']:>10.4f}"
                     f"{'<=0.5':>10}{row['ci_lower']:>10.4f}")
    return "\n".join(lines)
