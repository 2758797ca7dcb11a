/** View model for the refinement explorer: how interval weights tighten as
 * the alpha grid is refined. Each refinement level m gives a uniform grid of
 * m levels with mesh 1/(m - 1), which the engine reports as the degree of
 * approximation. */

import { SolveResult } from "./types.js";

export const M_CHOICES = [2, 3, 5, 9, 17, 33] as const;

export interface IntervalBar {
  criterion: string;
  lo: number;
  hi: number;
  mid: number;
  width: number;
  /** Bar geometry as fractions of the chart width, for direct CSS use. */
  leftPct: number;
  widthPct: number;
}

export interface ExplorerRow {
  m: number;
  doa: number;
  epsilonStar: number;
  bars: IntervalBar[];
}

export function doaForM(m: number): number {
  if (!Number.isInteger(m) || m < 2) throw new Error(`invalid refinement level ${m}`);
  return 1 / (m - 1);
}

export function buildRow(m: number, result: SolveResult): ExplorerRow {
  const span = Math.max(...result.weights.map((w) => w.interval[1]), 1e-12);
  return {
    m,
    doa: result.doa,
    epsilonStar: result.epsilon_star,
    bars: result.weights.map((w) => {
      const [lo, hi] = w.interval;
      return {
        criterion: w.criterion,
        lo,
        hi,
        mid: (lo + hi) / 2,
        width: hi - lo,
        leftPct: (100 * lo) / span,
        widthPct: (100 * (hi - lo)) / span,
      };
    }),
  };
}

export class RefinementExplorer {
  private readonly rows = new Map<number, ExplorerRow>();

  addResult(m: number, result: SolveResult): ExplorerRow {
    const row = buildRow(m, result);
    this.rows.set(m, row);
    return row;
  }

  sortedRows(): ExplorerRow[] {
    return [...this.rows.values()].sort((a, b) => a.m - b.m);
  }

  /** Checks that every criterion's interval narrows (never widens beyond
   * slack) as m increases across the collected results. */
  narrowingHolds(slack = 2e-3): boolean {
    const rows = this.sortedRows();
    for (let r = 1; r < rows.length; r += 1) {
      const prev = rows[r - 1];
      const curr = rows[r];
      for (const bar of curr.bars) {
        const before = prev.bars.find((b) => b.criterion === bar.criterion);
        if (before !== undefined && bar.width > before.width + slack) return false;
      }
    }
    return true;
  }
}
