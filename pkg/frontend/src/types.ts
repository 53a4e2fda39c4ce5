// Wire types for the query service. These mirror the server's JSON
// exactly; the UI never invents fields of its own on this boundary.

export type Sense = "minimize" | "maximize";

export type DimensionSpec = {
  id: string;
  sense: Sense;
  range_lo: number;
  range_hi: number;
  description: string;
};

export type SchemaResponse = {
  dimensions: DimensionSpec[];
  fixed_attributes: Record<string, string[]>;
};

export type StatsResponse = {
  count: number;
  dimensions: Record<string, { min: number | null; max: number | null }>;
};

export type ServiceJson = {
  id: string;
  name: string;
  fixed: Record<string, string>;
  dims: Record<string, number>;
};

export type CriterionJson = {
  dim: string;
  weight: number;
  q: number;
  p: number;
  v: number | null;
};

export type SettingsJson = {
  cut_level: number;
  reinforced_veto: boolean;
  criteria: CriterionJson[];
};

export type ResultJson = {
  filtered_count: number;
  skyline_count: number;
  final_count: number;
  skyline: ServiceJson[];
  final: ServiceJson[];
  timings_ms: Record<string, number>;
  settings_used: SettingsJson;
};

export type ApiErrorBody = {
  code: string;
  message: string;
  field?: string;
};

// Query JSON as documented by the pipeline. `importance` is one of the
// five level names; weights are assigned server-side.
export type ImportanceLevel =
  | "not_important"
  | "slightly_important"
  | "moderately_important"
  | "very_important"
  | "extremely_important";

export const IMPORTANCE_LEVELS: ImportanceLevel[] = [
  "not_important",
  "slightly_important",
  "moderately_important",
  "very_important",
  "extremely_important",
];

export type ThresholdJson = { q?: number; p?: number; v?: number | null };

export type QueryJson = {
  fixed: Record<string, string>;
  optimize: { dim: string; importance: ImportanceLevel }[];
  electre?: {
    cut_level?: number;
    criteria?: Record<string, ThresholdJson>;
  };
};
