/** Session state for one elicitation; client-side validation mirrors the
 * server's comparison-system invariants so the wizard can never submit a
 * document the API would reject. */

import { FpcsDocument, SCALE_LABELS, ScaleLabel } from "./types.js";

export interface SessionSnapshot {
  criteria: string[];
  best: number | null;
  worst: number | null;
  bestToOthers: (ScaleLabel | null)[];
  othersToWorst: (ScaleLabel | null)[];
  m: number;
  threshold: number;
}

export class SessionState {
  criteria: string[] = [];
  best: number | null = null;
  worst: number | null = null;
  bestToOthers: (ScaleLabel | null)[] = [];
  othersToWorst: (ScaleLabel | null)[] = [];
  m = 17;
  threshold = 0.1;

  setCriteria(names: string[]): string[] {
    const errors: string[] = [];
    const trimmed = names.map((n) => n.trim());
    if (trimmed.length < 2) errors.push("need at least two criteria");
    if (trimmed.some((n) => n.length === 0)) errors.push("criterion names must be non-empty");
    if (new Set(trimmed).size !== trimmed.length) errors.push("criterion names must be unique");
    if (errors.length === 0) {
      this.criteria = trimmed;
      this.best = null;
      this.worst = null;
      this.bestToOthers = trimmed.map(() => null);
      this.othersToWorst = trimmed.map(() => null);
    }
    return errors;
  }

  /** Indices selectable as worst once best is chosen; best = worst is unreachable. */
  selectableWorst(): number[] {
    return this.criteria.map((_, i) => i).filter((i) => i !== this.best);
  }

  setBest(i: number): void {
    this.assertIndex(i);
    this.best = i;
    if (this.worst === i) this.worst = null;
    this.applyForcedJudgments();
  }

  setWorst(i: number): void {
    this.assertIndex(i);
    if (i === this.best) throw new Error("best and worst must differ");
    this.worst = i;
    this.applyForcedJudgments();
  }

  /** Self-comparisons are pinned to "1"; the cell is not editable in the UI. */
  isForced(vector: "best_to_others" | "others_to_worst", i: number): boolean {
    if (vector === "best_to_others") return i === this.best;
    return i === this.worst;
  }

  setBestToOther(i: number, label: ScaleLabel): void {
    this.assertIndex(i);
    if (this.isForced("best_to_others", i) && label !== "1") {
      throw new Error("self-comparison of the best criterion is fixed at 1");
    }
    this.bestToOthers[i] = label;
    // keep the shared best-to-worst judgment in sync across both vectors
    if (i === this.worst && this.best !== null) this.othersToWorst[this.best] = label;
  }

  setOtherToWorst(i: number, label: ScaleLabel): void {
    this.assertIndex(i);
    if (this.isForced("others_to_worst", i) && label !== "1") {
      throw new Error("self-comparison of the worst criterion is fixed at 1");
    }
    if (i === this.best) {
      if (this.worst !== null && this.bestToOthers[this.worst] !== null
          && this.bestToOthers[this.worst] !== label) {
        throw new Error("the best-to-worst judgment is already set in the first vector");
      }
      if (this.worst !== null) this.bestToOthers[this.worst] = label;
    }
    this.othersToWorst[i] = label;
  }

  validationErrors(): string[] {
    const errors: string[] = [];
    if (this.criteria.length < 2) errors.push("need at least two criteria");
    if (this.best === null) errors.push("best criterion not selected");
    if (this.worst === null) errors.push("worst criterion not selected");
    if (this.best !== null && this.best === this.worst) errors.push("best and worst must differ");
    this.bestToOthers.forEach((label, i) => {
      if (label === null) errors.push(`missing best-to-${this.criteria[i]} judgment`);
    });
    this.othersToWorst.forEach((label, i) => {
      if (label === null) errors.push(`missing ${this.criteria[i]}-to-worst judgment`);
    });
    if (this.best !== null && this.bestToOthers[this.best] !== null
        && this.bestToOthers[this.best] !== "1") {
      errors.push("self-comparison of the best criterion must be 1");
    }
    if (this.worst !== null && this.othersToWorst[this.worst] !== null
        && this.othersToWorst[this.worst] !== "1") {
      errors.push("self-comparison of the worst criterion must be 1");
    }
    if (this.best !== null && this.worst !== null
        && this.bestToOthers[this.worst] !== null && this.othersToWorst[this.best] !== null
        && this.bestToOthers[this.worst] !== this.othersToWorst[this.best]) {
      errors.push("best-to-worst judgment mismatch between the two vectors");
    }
    return errors;
  }

  isComplete(): boolean {
    return this.validationErrors().length === 0;
  }

  /** Export as the same JSON document the CLI fixtures use. */
  toDocument(): FpcsDocument {
    const errors = this.validationErrors();
    if (errors.length > 0) throw new Error(`incomplete session: ${errors[0]}`);
    return {
      criteria: [...this.criteria],
      best: this.criteria[this.best as number],
      worst: this.criteria[this.worst as number],
      best_to_others: this.bestToOthers.map((l) => l as string),
      others_to_worst: this.othersToWorst.map((l) => l as string),
    };
  }

  static fromDocument(doc: FpcsDocument): SessionState {
    const state = new SessionState();
    const errors = state.setCriteria(doc.criteria);
    if (errors.length > 0) throw new Error(errors[0]);
    const best = doc.criteria.indexOf(doc.best);
    const worst = doc.criteria.indexOf(doc.worst);
    if (best < 0 || worst < 0) throw new Error("unknown best or worst criterion");
    state.setBest(best);
    state.setWorst(worst);
    doc.best_to_others.forEach((label, i) => {
      state.bestToOthers[i] = asLabel(label);
    });
    doc.others_to_worst.forEach((label, i) => {
      state.othersToWorst[i] = asLabel(label);
    });
    const remaining = state.validationErrors();
    if (remaining.length > 0) throw new Error(remaining[0]);
    return state;
  }

  snapshot(): SessionSnapshot {
    return {
      criteria: [...this.criteria],
      best: this.best,
      worst: this.worst,
      bestToOthers: [...this.bestToOthers],
      othersToWorst: [...this.othersToWorst],
      m: this.m,
      threshold: this.threshold,
    };
  }

  private applyForcedJudgments(): void {
    if (this.best !== null) this.bestToOthers[this.best] = "1";
    if (this.worst !== null) this.othersToWorst[this.worst] = "1";
  }

  private assertIndex(i: number): void {
    if (i < 0 || i >= this.criteria.length) throw new Error(`criterion index ${i} out of range`);
  }
}

function asLabel(label: string): ScaleLabel {
  if (!(SCALE_LABELS as readonly string[]).includes(label)) {
    throw new Error(`unknown linguistic label ${label}`);
  }
  return label as ScaleLabel;
}
