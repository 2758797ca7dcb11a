/** Four-step elicitation flow driving a SessionState. The wizard exposes the
 * choices that are legal at each step, so the UI can render only reachable
 * selections and never needs to surface a server-side validation error. */

import { SessionState } from "./state.js";
import { FpcsDocument, ScaleLabel } from "./types.js";

export const WIZARD_STEPS = [
  "criteria",
  "best_worst",
  "best_to_others",
  "others_to_worst",
] as const;
export type WizardStep = (typeof WIZARD_STEPS)[number];

export class Wizard {
  readonly state: SessionState;
  private stepIndex = 0;

  constructor(state: SessionState = new SessionState()) {
    this.state = state;
  }

  get step(): WizardStep {
    return WIZARD_STEPS[this.stepIndex];
  }

  /** Whether the current step has everything it needs to advance. */
  stepComplete(): boolean {
    switch (this.step) {
      case "criteria":
        return this.state.criteria.length >= 2;
      case "best_worst":
        return this.state.best !== null && this.state.worst !== null;
      case "best_to_others":
        return this.state.bestToOthers.every((label) => label !== null);
      case "others_to_worst":
        return this.state.isComplete();
    }
  }

  next(): WizardStep {
    if (!this.stepComplete()) {
      throw new Error(`step ${this.step} is incomplete`);
    }
    if (this.stepIndex < WIZARD_STEPS.length - 1) this.stepIndex += 1;
    return this.step;
  }

  back(): WizardStep {
    if (this.stepIndex > 0) this.stepIndex -= 1;
    return this.step;
  }

  goTo(step: WizardStep): void {
    const target = WIZARD_STEPS.indexOf(step);
    for (let i = 0; i < target; i += 1) {
      const probe = new Wizard(this.state);
      probe.stepIndex = i;
      if (!probe.stepComplete()) {
        throw new Error(`cannot reach step ${step}: ${WIZARD_STEPS[i]} is incomplete`);
      }
    }
    this.stepIndex = target;
  }

  /** Criteria selectable as best; every criterion is allowed. */
  bestChoices(): number[] {
    return this.state.criteria.map((_, i) => i);
  }

  /** Criteria selectable as worst; the best criterion is excluded. */
  worstChoices(): number[] {
    return this.state.selectableWorst();
  }

  /** Labels selectable for the best-to-others judgment of criterion i.
   * The self-comparison cell offers only "1". */
  bestToOtherChoices(i: number): ScaleLabel[] {
    if (this.state.isForced("best_to_others", i)) return ["1"];
    return allLabels();
  }

  /** Labels selectable for the others-to-worst judgment of criterion i.
   * The self-comparison cell offers only "1", and the best criterion's cell
   * offers only the label already chosen against the worst, if any. */
  otherToWorstChoices(i: number): ScaleLabel[] {
    if (this.state.isForced("others_to_worst", i)) return ["1"];
    if (i === this.state.best && this.state.worst !== null) {
      const pinned = this.state.bestToOthers[this.state.worst];
      if (pinned !== null) return [pinned];
    }
    return allLabels();
  }

  /** Request body for /api/solve at the session's refinement level. */
  buildRequestBody(): FpcsDocument & { m: number } {
    return { ...this.state.toDocument(), m: this.state.m };
  }
}

function allLabels(): ScaleLabel[] {
  return ["1", "2", "3", "4", "5", "6", "7", "8", "9"];
}
