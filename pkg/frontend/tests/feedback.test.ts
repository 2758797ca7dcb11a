import { describe, expect, it } from "vitest";
import { buildFeedback, formatNumber } from "../src/feedback.js";
import { ConsistencyResult } from "../src/types.js";

/** Consistency analysis of the five-criterion reference elicitation on the
 * coarsest grid; the numbers match the engine's own regression values. */
const REFERENCE: ConsistencyResult = {
  criteria: ["c1", "c2", "c3", "c4", "c5"],
  grid: [0, 1],
  epsilon_star: 1.3945,
  doa: 1,
  max_cv: 1.3945,
  ci_lower: 4.4699,
  cr_upper: 0.312,
  cr_conservative: 0.5357,
  consistent: false,
  violations: [
    { case: 3, indices: [1, 3], alpha: [0], cv: 1.2045 },
    { case: 4, indices: [2], alpha: [1], cv: 1.3945 },
  ],
  threshold: 0.1,
  acceptable: false,
};

describe("buildFeedback badge", () => {
  it("marks the reference elicitation as above the threshold", () => {
    const model = buildFeedback(REFERENCE);
    expect(model.badge.level).toBe("warning");
    expect(model.badge.crUpper).toBeCloseTo(0.312, 10);
    expect(model.badge.crConservative).toBeCloseTo(0.5357, 10);
    expect(model.badge.threshold).toBe(0.1);
    expect(model.badge.text).toContain("above");
    expect(model.badge.text).toContain("convention");
    expect(model.consistent).toBe(false);
  });

  it("marks a low ratio as acceptable", () => {
    const model = buildFeedback({
      ...REFERENCE,
      epsilon_star: 0.1624,
      max_cv: 0.1624,
      cr_upper: 0.0541,
      cr_conservative: 0.07,
      consistent: false,
      acceptable: true,
    });
    expect(model.badge.level).toBe("ok");
    expect(model.badge.text).toContain("within");
  });

  it("compares against the threshold when the server omits a verdict", () => {
    const base = { ...REFERENCE, cr_upper: 0.05 };
    delete base.acceptable;
    delete base.threshold;
    const model = buildFeedback(base, 0.1);
    expect(model.badge.level).toBe("ok");
    expect(model.badge.threshold).toBe(0.1);
  });

  it("reports an undefined ratio for a degenerate elicitation", () => {
    const model = buildFeedback({
      ...REFERENCE,
      epsilon_star: 0,
      max_cv: 0,
      ci_lower: null,
      cr_upper: null,
      cr_conservative: null,
      consistent: true,
      violations: [],
      acceptable: undefined,
    });
    expect(model.badge.level).toBe("undefined");
    expect(model.badge.crUpper).toBeNull();
    expect(model.violations).toEqual([]);
  });
});

describe("buildFeedback violations", () => {
  it("names the offending criteria and alpha levels", () => {
    const model = buildFeedback(REFERENCE);
    expect(model.violations).toHaveLength(2);
    expect(model.violations[0].criteria).toEqual(["c2", "c4"]);
    expect(model.violations[0].text).toContain("c2, c4");
    expect(model.violations[0].text).toContain("alpha 0");
    expect(model.violations[1].criteria).toEqual(["c3"]);
    expect(model.violations[1].text).toContain("severity 1.3945");
  });

  it("keeps the server's severity values untouched", () => {
    const model = buildFeedback(REFERENCE);
    expect(model.violations.map((v) => v.cv)).toEqual([1.2045, 1.3945]);
    expect(model.maxCv).toBeCloseTo(1.3945, 10);
    expect(model.epsilonStar).toBeCloseTo(1.3945, 10);
    expect(model.ciLower).toBeCloseTo(4.4699, 10);
  });
});

describe("formatNumber", () => {
  it("prints four decimals without trailing zeros", () => {
    expect(formatNumber(0.312)).toBe("0.312");
    expect(formatNumber(1.3945)).toBe("1.3945");
    expect(formatNumber(1)).toBe("1");
    expect(formatNumber(0.0625)).toBe("0.0625");
  });
});
