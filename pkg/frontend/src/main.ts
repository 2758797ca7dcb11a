/** DOM wiring for the elicitation app. All logic lives in the tested modules
 * (state, wizard, api, feedback, explorer); this file only renders and routes
 * events, so it stays outside the unit test surface. */

import { ApiClient, ApiRequestError } from "./api.js";
import { buildFeedback, formatNumber } from "./feedback.js";
import { M_CHOICES, RefinementExplorer, doaForM } from "./explorer.js";
import { SessionState } from "./state.js";
import { WIZARD_STEPS, Wizard, WizardStep } from "./wizard.js";
import { ScaleEntry, ScaleLabel, SolveResult } from "./types.js";

const api = new ApiClient();
let wizard = new Wizard();
let scaleEntries: ScaleEntry[] = [];
let explorer = new RefinementExplorer();
let lastSolve: SolveResult | null = null;

const STEP_TITLES: Record<WizardStep, string> = {
  criteria: "1. Criteria",
  best_worst: "2. Best and worst",
  best_to_others: "3. Best against the others",
  others_to_worst: "4. The others against the worst",
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

function scaleTitle(label: string): string {
  const entry = scaleEntries.find((e) => e.label === label);
  return entry === undefined ? label : `${label}: ${entry.description}`;
}

function render(): void {
  renderStepNav();
  renderStepBody();
  renderActions();
}

function renderStepNav(): void {
  const nav = el("step-nav");
  nav.replaceChildren(...WIZARD_STEPS.map((step) => {
    const item = document.createElement("span");
    item.className = step === wizard.step ? "step active" : "step";
    item.textContent = STEP_TITLES[step];
    return item;
  }));
}

function renderStepBody(): void {
  for (const step of WIZARD_STEPS) {
    el(`panel-${step}`).hidden = step !== wizard.step;
  }
  if (wizard.step === "best_worst") renderBestWorst();
  if (wizard.step === "best_to_others") renderJudgments("best_to_others");
  if (wizard.step === "others_to_worst") renderJudgments("others_to_worst");
}

function renderBestWorst(): void {
  const bestSelect = el<HTMLSelectElement>("best-select");
  const worstSelect = el<HTMLSelectElement>("worst-select");
  fillSelect(bestSelect, wizard.bestChoices(), wizard.state.best);
  fillSelect(worstSelect, wizard.worstChoices(), wizard.state.worst);
  worstSelect.disabled = wizard.state.best === null;
}

function fillSelect(select: HTMLSelectElement, choices: number[],
                    current: number | null): void {
  select.replaceChildren(new Option("choose...", ""));
  for (const i of choices) {
    const option = new Option(wizard.state.criteria[i], String(i));
    option.selected = i === current;
    select.add(option);
  }
}

function renderJudgments(vector: "best_to_others" | "others_to_worst"): void {
  const table = el(`table-${vector}`);
  const state = wizard.state;
  const values = vector === "best_to_others" ? state.bestToOthers : state.othersToWorst;
  table.replaceChildren(...state.criteria.map((name, i) => {
    const row = document.createElement("tr");
    const cell = document.createElement("td");
    cell.textContent = name;
    row.append(cell);
    const selectCell = document.createElement("td");
    const select = document.createElement("select");
    const choices = vector === "best_to_others"
      ? wizard.bestToOtherChoices(i) : wizard.otherToWorstChoices(i);
    select.disabled = choices.length === 1 && values[i] === choices[0];
    if (values[i] === null) select.add(new Option("choose...", ""));
    for (const label of choices) {
      const option = new Option(scaleTitle(label), label);
      option.selected = label === values[i];
      select.add(option);
    }
    select.addEventListener("change", () => {
      const label = select.value as ScaleLabel;
      if (vector === "best_to_others") state.setBestToOther(i, label);
      else state.setOtherToWorst(i, label);
      render();
    });
    selectCell.append(select);
    row.append(selectCell);
    return row;
  }));
}

function renderActions(): void {
  el<HTMLButtonElement>("btn-back").disabled = wizard.step === WIZARD_STEPS[0];
  el<HTMLButtonElement>("btn-next").disabled = !wizard.stepComplete()
    || wizard.step === WIZARD_STEPS[WIZARD_STEPS.length - 1];
  el<HTMLButtonElement>("btn-solve").disabled = !wizard.state.isComplete();
  const errors = wizard.state.validationErrors();
  el("validation").textContent = wizard.state.criteria.length >= 2 && errors.length > 0
    ? errors[0] : "";
}

async function runSolve(): Promise<void> {
  const status = el("solve-status");
  status.textContent = "solving...";
  try {
    const doc = wizard.state.toDocument();
    const m = wizard.state.m;
    const [solve, consistency] = await Promise.all([
      api.solve(doc, { m }),
      api.consistency(doc, { gridPoints: m, threshold: wizard.state.threshold }),
    ]);
    lastSolve = solve;
    explorer.addResult(m, solve);
    status.textContent = "";
    renderResults(solve);
    renderFeedback(consistency);
    renderExplorer();
  } catch (error) {
    if (ApiClient.isCancellation(error)) return;
    status.textContent = error instanceof ApiRequestError
      ? `request failed: ${error.message}` : `request failed: ${String(error)}`;
  }
}

function renderResults(result: SolveResult): void {
  el("results").hidden = false;
  el("results-meta").textContent =
    `grid of ${result.grid.length} levels, degree of approximation `
    + `${formatNumber(result.doa)}, objective ${formatNumber(result.epsilon_star)}`;
  const body = el("results-body");
  body.replaceChildren(...result.weights.map((w) => {
    const row = document.createElement("tr");
    for (const text of [
      w.criterion,
      `[${formatNumber(w.interval[0])}, ${formatNumber(w.interval[1])}]`,
      formatNumber(w.average),
    ]) {
      const cell = document.createElement("td");
      cell.textContent = text;
      row.append(cell);
    }
    return row;
  }));
}

function renderFeedback(result: Parameters<typeof buildFeedback>[0]): void {
  const model = buildFeedback(result, wizard.state.threshold);
  const badge = el("cr-badge");
  badge.className = `badge ${model.badge.level}`;
  badge.textContent = model.badge.crUpper === null
    ? "CR undefined" : `CR <= ${formatNumber(model.badge.crUpper)}`;
  el("cr-text").textContent = model.badge.text;
  const list = el("violation-list");
  list.replaceChildren(...model.violations.slice(0, 20).map((v) => {
    const item = document.createElement("li");
    item.textContent = v.text;
    return item;
  }));
  el("feedback").hidden = false;
}

function renderExplorer(): void {
  const rows = explorer.sortedRows();
  if (rows.length === 0) return;
  el("explorer").hidden = false;
  const container = el("explorer-rows");
  container.replaceChildren(...rows.map((row) => {
    const block = document.createElement("div");
    block.className = "explorer-row";
    const heading = document.createElement("h4");
    heading.textContent = `m = ${row.m} (degree of approximation ${formatNumber(row.doa)})`;
    block.append(heading);
    for (const bar of row.bars) {
      const line = document.createElement("div");
      line.className = "bar-line";
      const label = document.createElement("span");
      label.className = "bar-label";
      label.textContent = bar.criterion;
      const track = document.createElement("span");
      track.className = "bar-track";
      const fill = document.createElement("span");
      fill.className = "bar-fill";
      fill.style.left = `${bar.leftPct}%`;
      fill.style.width = `${Math.max(bar.widthPct, 0.5)}%`;
      fill.title = `[${formatNumber(bar.lo)}, ${formatNumber(bar.hi)}]`;
      track.append(fill);
      line.append(label, track);
      block.append(line);
    }
    return block;
  }));
}

function exportSession(): void {
  const doc = wizard.state.toDocument();
  const blob = new Blob([JSON.stringify(doc, null, 2)], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "session.json";
  link.click();
  URL.revokeObjectURL(link.href);
}

async function importSession(file: File): Promise<void> {
  try {
    const state = SessionState.fromDocument(JSON.parse(await file.text()));
    state.m = wizard.state.m;
    state.threshold = wizard.state.threshold;
    wizard = new Wizard(state);
    wizard.goTo("others_to_worst");
    explorer = new RefinementExplorer();
    lastSolve = null;
    el("results").hidden = true;
    el("feedback").hidden = true;
    el("explorer").hidden = true;
    render();
  } catch (error) {
    el("validation").textContent = `import failed: ${String(error)}`;
  }
}

function wireEvents(): void {
  el<HTMLButtonElement>("btn-next").addEventListener("click", () => {
    wizard.next();
    render();
  });
  el<HTMLButtonElement>("btn-back").addEventListener("click", () => {
    wizard.back();
    render();
  });
  el<HTMLButtonElement>("btn-criteria").addEventListener("click", () => {
    const raw = el<HTMLTextAreaElement>("criteria-input").value;
    const names = raw.split("\n").map((line) => line.trim()).filter((line) => line !== "");
    const errors = wizard.state.setCriteria(names);
    el("validation").textContent = errors[0] ?? "";
    if (errors.length === 0) {
      explorer = new RefinementExplorer();
      render();
    }
  });
  el<HTMLSelectElement>("best-select").addEventListener("change", (event) => {
    const value = (event.target as HTMLSelectElement).value;
    if (value !== "") wizard.state.setBest(Number(value));
    render();
  });
  el<HTMLSelectElement>("worst-select").addEventListener("change", (event) => {
    const value = (event.target as HTMLSelectElement).value;
    if (value !== "") wizard.state.setWorst(Number(value));
    render();
  });
  const mSelect = el<HTMLSelectElement>("m-select");
  for (const m of M_CHOICES) {
    const option = new Option(`m = ${m} (mesh ${formatNumber(doaForM(m))})`, String(m));
    option.selected = m === wizard.state.m;
    mSelect.add(option);
  }
  mSelect.addEventListener("change", () => {
    wizard.state.m = Number(mSelect.value);
    if (lastSolve !== null) void runSolve();
  });
  el<HTMLButtonElement>("btn-solve").addEventListener("click", () => void runSolve());
  el<HTMLButtonElement>("btn-export").addEventListener("click", exportSession);
  el<HTMLInputElement>("import-input").addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (file !== undefined) void importSession(file);
    input.value = "";
  });
}

async function start(): Promise<void> {
  try {
    scaleEntries = await api.scale();
  } catch {
    scaleEntries = [];
  }
  wireEvents();
  render();
}

void start();
