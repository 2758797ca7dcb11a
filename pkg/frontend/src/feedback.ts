/** View model for the consistency feedback panel. Turns a raw consistency
 * result into a badge plus human-readable violation rows; the numbers all
 * come from the server untouched. */

import { ConsistencyResult, ViolationRow } from "./types.js";

export type BadgeLevel = "ok" | "warning" | "undefined";

export interface FeedbackBadge {
  level: BadgeLevel;
  crUpper: number | null;
  crConservative: number | null;
  threshold: number;
  text: string;
}

export interface ViolationDisplay {
  caseNumber: number;
  criteria: string[];
  alpha: number[];
  cv: number;
  text: string;
}

export interface FeedbackModel {
  badge: FeedbackBadge;
  maxCv: number;
  epsilonStar: number;
  ciLower: number | null;
  consistent: boolean;
  violations: ViolationDisplay[];
}

const CASE_SUMMARIES: Record<number, string> = {
  1: "best-to-other judgment outweighed by the other-to-worst side",
  2: "other-to-worst judgment outweighed by the best-to-other side",
  3: "a pair of intermediate judgments overshoots the best-to-worst bound",
  4: "upper alpha-cut chain through this criterion is inconsistent",
  5: "mixed alpha-cut chain through this criterion is inconsistent",
  6: "lower alpha-cut chain through this criterion is inconsistent",
  7: "best-to-other cut fails to tighten as alpha increases",
  8: "other-to-worst cut fails to tighten as alpha increases",
  9: "best-to-worst cut fails to tighten as alpha increases",
};

export function buildFeedback(result: ConsistencyResult,
                              fallbackThreshold = 0.1): FeedbackModel {
  const threshold = result.threshold ?? fallbackThreshold;
  return {
    badge: buildBadge(result, threshold),
    maxCv: result.max_cv,
    epsilonStar: result.epsilon_star,
    ciLower: result.ci_lower,
    consistent: result.consistent,
    violations: result.violations.map((v) => describeViolation(v, result.criteria)),
  };
}

function buildBadge(result: ConsistencyResult, threshold: number): FeedbackBadge {
  if (result.cr_upper === null) {
    return {
      level: "undefined",
      crUpper: null,
      crConservative: null,
      threshold,
      text: "consistency ratio undefined: best and worst are judged equally preferable",
    };
  }
  const acceptable = result.acceptable ?? result.cr_upper <= threshold;
  const level: BadgeLevel = acceptable ? "ok" : "warning";
  const verdict = acceptable ? "within" : "above";
  return {
    level,
    crUpper: result.cr_upper,
    crConservative: result.cr_conservative,
    threshold,
    text: `consistency ratio bound ${formatNumber(result.cr_upper)} is ${verdict} `
      + `the ${formatNumber(threshold)} threshold (a common working convention, `
      + "not a hard rule)",
  };
}

function describeViolation(v: ViolationRow, criteria: string[]): ViolationDisplay {
  const names = v.indices.map((i) => criteria[i] ?? `criterion ${i}`);
  const summary = CASE_SUMMARIES[v.case] ?? "inconsistent judgment combination";
  const where = names.length > 0 ? ` involving ${names.join(", ")}` : "";
  const levels = v.alpha.length > 0
    ? ` at alpha ${v.alpha.map(formatNumber).join(", ")}`
    : "";
  return {
    caseNumber: v.case,
    criteria: names,
    alpha: v.alpha,
    cv: v.cv,
    text: `${summary}${where}${levels} (severity ${formatNumber(v.cv)})`,
  };
}

export function formatNumber(x: number): string {
  return x.toFixed(4).replace(/(\.\d*?)0+$/, "$1").replace(/\.$/, "");
}
