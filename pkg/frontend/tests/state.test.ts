import { describe, expect, it } from "vitest";
import { SessionState } from "../src/state.js";
import { FpcsDocument } from "../src/types.js";

function filledState(): SessionState {
  const state = new SessionState();
  state.setCriteria(["quality", "price", "comfort"]);
  state.setBest(1);
  state.setWorst(2);
  state.setBestToOther(0, "2");
  state.setBestToOther(2, "8");
  state.setOtherToWorst(0, "4");
  return state;
}

describe("SessionState criteria validation", () => {
  it("rejects fewer than two criteria", () => {
    const state = new SessionState();
    expect(state.setCriteria(["only"])).toContain("need at least two criteria");
    expect(state.criteria).toEqual([]);
  });

  it("rejects duplicate names", () => {
    const state = new SessionState();
    expect(state.setCriteria(["a", "a"])).toContain("criterion names must be unique");
  });

  it("rejects blank names", () => {
    const state = new SessionState();
    expect(state.setCriteria(["a", "  "])).toContain("criterion names must be non-empty");
  });

  it("trims names and resets downstream selections", () => {
    const state = filledState();
    expect(state.setCriteria([" x ", "y"])).toEqual([]);
    expect(state.criteria).toEqual(["x", "y"]);
    expect(state.best).toBeNull();
    expect(state.worst).toBeNull();
    expect(state.bestToOthers).toEqual([null, null]);
  });
});

describe("SessionState best and worst", () => {
  it("never offers the best criterion as worst", () => {
    const state = new SessionState();
    state.setCriteria(["a", "b", "c"]);
    state.setBest(0);
    expect(state.selectableWorst()).toEqual([1, 2]);
    expect(() => state.setWorst(0)).toThrow("best and worst must differ");
  });

  it("clears worst when best is moved onto it", () => {
    const state = new SessionState();
    state.setCriteria(["a", "b", "c"]);
    state.setBest(0);
    state.setWorst(1);
    state.setBest(1);
    expect(state.worst).toBeNull();
  });

  it("pins self-comparisons to the unit judgment", () => {
    const state = new SessionState();
    state.setCriteria(["a", "b", "c"]);
    state.setBest(0);
    state.setWorst(2);
    expect(state.bestToOthers[0]).toBe("1");
    expect(state.othersToWorst[2]).toBe("1");
    expect(() => state.setBestToOther(0, "3")).toThrow("fixed at 1");
    expect(() => state.setOtherToWorst(2, "3")).toThrow("fixed at 1");
  });
});

describe("SessionState shared best-to-worst judgment", () => {
  it("mirrors the judgment across both vectors", () => {
    const state = new SessionState();
    state.setCriteria(["a", "b", "c"]);
    state.setBest(0);
    state.setWorst(2);
    state.setBestToOther(2, "8");
    expect(state.othersToWorst[0]).toBe("8");
  });

  it("flags a mismatch introduced by an imported document", () => {
    const state = filledState();
    state.setOtherToWorst(2, "1" as const);
    state.othersToWorst[1] = "5";
    expect(state.validationErrors()).toContain(
      "best-to-worst judgment mismatch between the two vectors");
  });
});

describe("SessionState export and import", () => {
  it("round-trips through the document format", () => {
    const state = filledState();
    const doc = state.toDocument();
    expect(doc).toEqual({
      criteria: ["quality", "price", "comfort"],
      best: "price",
      worst: "comfort",
      best_to_others: ["2", "1", "8"],
      others_to_worst: ["4", "8", "1"],
    });
    const restored = SessionState.fromDocument(doc);
    expect(restored.toDocument()).toEqual(doc);
  });

  it("refuses to export an incomplete session", () => {
    const state = new SessionState();
    state.setCriteria(["a", "b"]);
    expect(() => state.toDocument()).toThrow("incomplete session");
  });

  it("rejects documents with unknown labels", () => {
    const doc: FpcsDocument = {
      criteria: ["a", "b"],
      best: "a",
      worst: "b",
      best_to_others: ["1", "10"],
      others_to_worst: ["10", "1"],
    };
    expect(() => SessionState.fromDocument(doc)).toThrow("unknown linguistic label");
  });

  it("rejects documents whose best criterion is not listed", () => {
    const doc: FpcsDocument = {
      criteria: ["a", "b"],
      best: "z",
      worst: "b",
      best_to_others: ["1", "3"],
      others_to_worst: ["3", "1"],
    };
    expect(() => SessionState.fromDocument(doc)).toThrow("unknown best or worst");
  });
});
