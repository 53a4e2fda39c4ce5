// Form state and its projection to the query JSON the service accepts.
//
// The state keeps raw input strings (what the user typed); projection
// parses them and emits keys in schema order so the same form state
// always serializes to the same bytes.

import {
  IMPORTANCE_LEVELS,
  ImportanceLevel,
  QueryJson,
  SchemaResponse,
  ThresholdJson,
} from "./types.js";

export type DimensionMode = "ignore" | "optimize";

export type DimensionRow = {
  mode: DimensionMode;
  importance: ImportanceLevel;
  // advanced per-criterion thresholds, raw input text ("" = server default)
  q: string;
  p: string;
  v: string;
  noVeto: boolean;
};

export type UiQueryState = {
  // fixed attribute -> chosen value, "" meaning "any"
  fixed: Record<string, string>;
  rows: Record<string, DimensionRow>;
  cutLevel: string;
  advancedOpen: boolean;
  diffView: boolean;
};

export type ValidationIssue = { field: string; message: string };

export function initialState(schema: SchemaResponse): UiQueryState {
  const fixed: Record<string, string> = {};
  for (const attr of Object.keys(schema.fixed_attributes)) fixed[attr] = "";
  const rows: Record<string, DimensionRow> = {};
  for (const spec of schema.dimensions) {
    rows[spec.id] = {
      mode: "ignore",
      importance: "moderately_important",
      q: "",
      p: "",
      v: "",
      noVeto: false,
    };
  }
  return { fixed, rows, cutLevel: "", advancedOpen: false, diffView: false };
}

function row(state: UiQueryState, dim: string): DimensionRow {
  const r = state.rows[dim];
  if (!r) throw new Error(`unknown dimension ${dim}`);
  return r;
}

export function setMode(state: UiQueryState, dim: string, mode: DimensionMode): void {
  row(state, dim).mode = mode;
}

export function setImportance(state: UiQueryState, dim: string, level: ImportanceLevel): void {
  if (!IMPORTANCE_LEVELS.includes(level)) throw new Error(`unknown importance ${level}`);
  row(state, dim).importance = level;
}

export function setFixedValue(state: UiQueryState, attr: string, value: string): void {
  if (!(attr in state.fixed)) throw new Error(`unknown attribute ${attr}`);
  state.fixed[attr] = value;
}

export function setThreshold(
  state: UiQueryState,
  dim: string,
  key: "q" | "p" | "v",
  text: string,
): void {
  row(state, dim)[key] = text;
}

export function setNoVeto(state: UiQueryState, dim: string, on: boolean): void {
  row(state, dim).noVeto = on;
}

export function optimizedDims(state: UiQueryState, schema: SchemaResponse): string[] {
  return schema.dimensions.map((d) => d.id).filter((id) => state.rows[id]?.mode === "optimize");
}

// "" -> undefined, otherwise a finite number or an error marker
function parseField(text: string): number | undefined | "bad" {
  const t = text.trim();
  if (t === "") return undefined;
  const n = Number(t);
  return Number.isFinite(n) ? n : "bad";
}

export function validate(state: UiQueryState, schema: SchemaResponse): ValidationIssue[] {
  const issues: ValidationIssue[] = [];
  const active = optimizedDims(state, schema);
  if (active.length === 0) {
    issues.push({ field: "optimize", message: "pick at least one dimension to optimize" });
  }
  const cut = parseField(state.cutLevel);
  if (cut === "bad" || (typeof cut === "number" && !(cut > 0.5 && cut <= 1.0))) {
    issues.push({ field: "electre.cut_level", message: "cut level must be a number in (0.5, 1]" });
  }
  for (const dim of active) {
    const r = row(state, dim);
    const q = parseField(r.q);
    const p = parseField(r.p);
    const v = parseField(r.v);
    if (q === "bad" || (typeof q === "number" && q < 0)) {
      issues.push({ field: `electre.criteria.${dim}.q`, message: "must be a number >= 0" });
    }
    if (p === "bad" || (typeof p === "number" && p < 0)) {
      issues.push({ field: `electre.criteria.${dim}.p`, message: "must be a number >= 0" });
    }
    if (!r.noVeto && (v === "bad" || (typeof v === "number" && v <= 0))) {
      issues.push({ field: `electre.criteria.${dim}.v`, message: "must be a number > 0" });
    }
    if (typeof q === "number" && typeof p === "number" && q > p) {
      issues.push({
        field: `electre.criteria.${dim}.q`,
        message: "indifference must not exceed preference",
      });
    }
  }
  return issues;
}

export function canSubmit(state: UiQueryState, schema: SchemaResponse): boolean {
  return validate(state, schema).length === 0;
}

// Projection. Key order is fixed by the schema, not by edit history, so
// equal states give byte-identical JSON.
export function projectQuery(state: UiQueryState, schema: SchemaResponse): QueryJson {
  const issues = validate(state, schema);
  if (issues.length > 0) {
    throw new Error(`invalid form state: ${issues[0]!.field}: ${issues[0]!.message}`);
  }
  const fixed: Record<string, string> = {};
  for (const attr of Object.keys(schema.fixed_attributes)) {
    const value = state.fixed[attr] ?? "";
    if (value !== "") fixed[attr] = value;
  }
  const optimize = optimizedDims(state, schema).map((dim) => ({
    dim,
    importance: row(state, dim).importance,
  }));

  const criteria: Record<string, ThresholdJson> = {};
  for (const dim of optimizedDims(state, schema)) {
    const r = row(state, dim);
    const spec: ThresholdJson = {};
    const q = parseField(r.q);
    const p = parseField(r.p);
    const v = parseField(r.v);
    if (typeof q === "number") spec.q = q;
    if (typeof p === "number") spec.p = p;
    if (r.noVeto) spec.v = null;
    else if (typeof v === "number") spec.v = v;
    if (Object.keys(spec).length > 0) criteria[dim] = spec;
  }

  const query: QueryJson = { fixed, optimize };
  const cut = parseField(state.cutLevel);
  const electre: QueryJson["electre"] = {};
  if (typeof cut === "number") electre.cut_level = cut;
  if (Object.keys(criteria).length > 0) electre.criteria = criteria;
  if (Object.keys(electre).length > 0) query.electre = electre;
  return query;
}

export function serializeQuery(state: UiQueryState, schema: SchemaResponse): string {
  return JSON.stringify(projectQuery(state, schema), null, 2);
}
