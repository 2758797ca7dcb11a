import { describe, expect, it } from "vitest";
import { M_CHOICES, RefinementExplorer, buildRow, doaForM } from "../src/explorer.js";
import { SolveResult } from "../src/types.js";

/** Engine regression values for the five-criterion reference elicitation. */
function referenceResult(m: 2 | 17): SolveResult {
  const intervals: Record<string, Record<number, [number, number]>> = {
    c1: { 2: [0.1245, 0.2106], 17: [0.1269, 0.2072] },
    c2: { 2: [0.3863, 0.478], 17: [0.3943, 0.4778] },
    c3: { 2: [0.1513, 0.1907], 17: [0.1516, 0.1837] },
    c4: { 2: [0.1319, 0.2477], 17: [0.1336, 0.2431] },
    c5: { 2: [0.0418, 0.0522], 17: [0.042, 0.0509] },
  };
  const criteria = Object.keys(intervals);
  return {
    criteria,
    grid: Array.from({ length: m }, (_, i) => i / (m - 1)),
    doa: 1 / (m - 1),
    epsilon_star: 1.3945,
    cr_upper: 0.312,
    cr_conservative: null,
    weights: criteria.map((c) => {
      const [lo, hi] = intervals[c][m];
      return { criterion: c, tfn: [lo, (lo + hi) / 2, hi], interval: [lo, hi], average: (lo + hi) / 2 };
    }),
  };
}

describe("refinement levels", () => {
  it("offers the documented ladder of grid sizes", () => {
    expect([...M_CHOICES]).toEqual([2, 3, 5, 9, 17, 33]);
  });

  it("computes the degree of approximation as the grid mesh", () => {
    expect(doaForM(2)).toBe(1);
    expect(doaForM(17)).toBe(0.0625);
    expect(doaForM(33)).toBe(0.03125);
    expect(() => doaForM(1)).toThrow("invalid refinement level");
    expect(() => doaForM(2.5)).toThrow("invalid refinement level");
  });
});

describe("buildRow", () => {
  it("turns interval weights into bar geometry", () => {
    const row = buildRow(2, referenceResult(2));
    expect(row.doa).toBe(1);
    expect(row.bars).toHaveLength(5);
    const c2 = row.bars.find((b) => b.criterion === "c2");
    expect(c2).toBeDefined();
    expect(c2!.lo).toBeCloseTo(0.3863, 10);
    expect(c2!.hi).toBeCloseTo(0.478, 10);
    expect(c2!.mid).toBeCloseTo((0.3863 + 0.478) / 2, 10);
    expect(c2!.width).toBeCloseTo(0.478 - 0.3863, 10);
  });

  it("scales bars to the widest upper endpoint", () => {
    const row = buildRow(2, referenceResult(2));
    const c2 = row.bars.find((b) => b.criterion === "c2")!;
    expect(c2.leftPct + c2.widthPct).toBeCloseTo(100, 6);
    for (const bar of row.bars) {
      expect(bar.leftPct).toBeGreaterThanOrEqual(0);
      expect(bar.leftPct + bar.widthPct).toBeLessThanOrEqual(100 + 1e-9);
    }
  });
});

describe("RefinementExplorer", () => {
  it("keeps rows sorted by refinement level", () => {
    const explorer = new RefinementExplorer();
    explorer.addResult(17, referenceResult(17));
    explorer.addResult(2, referenceResult(2));
    expect(explorer.sortedRows().map((r) => r.m)).toEqual([2, 17]);
  });

  it("confirms that every interval narrows as the grid is refined", () => {
    const explorer = new RefinementExplorer();
    explorer.addResult(2, referenceResult(2));
    explorer.addResult(17, referenceResult(17));
    expect(explorer.narrowingHolds(2e-3)).toBe(true);
  });

  it("detects an interval that widens under refinement", () => {
    const explorer = new RefinementExplorer();
    explorer.addResult(2, referenceResult(2));
    const widened = referenceResult(17);
    widened.weights[0].interval = [0.05, 0.35];
    explorer.addResult(17, widened);
    expect(explorer.narrowingHolds(2e-3)).toBe(false);
  });

  it("replaces the stored row when the same level is solved again", () => {
    const explorer = new RefinementExplorer();
    explorer.addResult(2, referenceResult(2));
    explorer.addResult(2, referenceResult(2));
    expect(explorer.sortedRows()).toHaveLength(1);
  });
});
