/** Wire types mirroring the HTTP API documents. */

export interface FpcsDocument {
  criteria: string[];
  best: string;
  worst: string;
  best_to_others: string[];
  others_to_worst: string[];
}

export interface ApiError {
  code: string;
  message: string;
  field_path: string | null;
}

export interface ApiEnvelope<T> {
  ok: boolean;
  result?: T;
  error?: ApiError;
}

export interface WeightRow {
  criterion: string;
  tfn: [number, number, number];
  interval: [number, number];
  average: number;
}

export interface SolveResult {
  criteria: string[];
  grid: number[];
  doa: number;
  epsilon_star: number;
  cr_upper: number | null;
  cr_conservative: number | null;
  weights: WeightRow[];
}

export interface ViolationRow {
  case: number;
  indices: number[];
  alpha: number[];
  cv: number;
}

export interface ConsistencyResult {
  criteria: string[];
  grid: number[];
  epsilon_star: number;
  doa: number;
  max_cv: number;
  ci_lower: number | null;
  cr_upper: number | null;
  cr_conservative: number | null;
  consistent: boolean;
  violations: ViolationRow[];
  threshold?: number;
  acceptable?: boolean;
}

export interface ScaleEntry {
  label: string;
  tfn: [number, number, number];
  description: string;
}

export const SCALE_LABELS = ["1", "2", "3", "4", "5", "6", "7", "8", "9"] as const;
export type ScaleLabel = (typeof SCALE_LABELS)[number];
