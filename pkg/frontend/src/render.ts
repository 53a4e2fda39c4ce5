// HTML builders. All pure string -> string so they can be tested without
// a browser; main.ts owns the DOM wiring.

import { UiError } from "./controller.js";
import { canSubmit, UiQueryState, validate } from "./queryState.js";
import { IMPORTANCE_LEVELS, ResultJson, SchemaResponse, ServiceJson } from "./types.js";

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function label(level: string): string {
  return level.replace(/_/g, " ");
}

const SENSE_ARROW = { minimize: "↓", maximize: "↑" } as const;

export function renderForm(schema: SchemaResponse, state: UiQueryState): string {
  const parts: string[] = [];

  parts.push('<fieldset class="fixed-block"><legend>fixed requirements</legend>');
  for (const [attr, values] of Object.entries(schema.fixed_attributes)) {
    const chosen = state.fixed[attr] ?? "";
    const options = ['<option value="">any</option>'];
    for (const value of values) {
      const sel = value === chosen ? " selected" : "";
      options.push(`<option value="${esc(value)}"${sel}>${esc(value)}</option>`);
    }
    parts.push(
      `<label class="fixed-row">${esc(attr)}` +
        `<select data-action="set-fixed" data-attr="${esc(attr)}">${options.join("")}</select>` +
        `</label>`,
    );
  }
  parts.push("</fieldset>");

  parts.push('<fieldset class="dims-block"><legend>dimensions</legend>');
  for (const spec of schema.dimensions) {
    const r = state.rows[spec.id];
    if (!r) continue;
    const arrow = SENSE_ARROW[spec.sense];
    const levels = IMPORTANCE_LEVELS.map((lvl) => {
      const sel = lvl === r.importance ? " selected" : "";
      return `<option value="${lvl}"${sel}>${esc(label(lvl))}</option>`;
    }).join("");
    const disabled = r.mode === "optimize" ? "" : " disabled";
    parts.push(
      `<div class="dim-row" data-dim="${esc(spec.id)}">` +
        `<span class="dim-name" title="${esc(spec.description)}">${esc(spec.id)} ` +
        `<span class="sense">${arrow}</span></span>` +
        `<label><input type="radio" name="mode-${esc(spec.id)}" value="ignore"` +
        `${r.mode === "ignore" ? " checked" : ""} data-action="set-mode" ` +
        `data-dim="${esc(spec.id)}"> ignore</label>` +
        `<label><input type="radio" name="mode-${esc(spec.id)}" value="optimize"` +
        `${r.mode === "optimize" ? " checked" : ""} data-action="set-mode" ` +
        `data-dim="${esc(spec.id)}"> optimize</label>` +
        `<select data-action="set-importance" data-dim="${esc(spec.id)}"${disabled}>` +
        `${levels}</select>` +
        `</div>`,
    );
  }
  parts.push("</fieldset>");

  parts.push(renderAdvancedPanel(schema, state));

  const issues = validate(state, schema);
  const disabled = canSubmit(state, schema) ? "" : " disabled";
  parts.push(
    `<div class="submit-row">` +
      `<button data-action="submit"${disabled}>run query</button>` +
      (issues.length > 0 ? `<span class="hint">${esc(issues[0]!.message)}</span>` : "") +
      `</div>`,
  );
  return parts.join("\n");
}

// Server defaults stay server-side; the inputs only show them as
// placeholders and an empty field sends nothing.
function renderAdvancedPanel(schema: SchemaResponse, state: UiQueryState): string {
  const open = state.advancedOpen ? " open" : "";
  const parts = [`<details class="advanced"${open}><summary>advanced (thresholds)</summary>`];
  parts.push(
    `<label class="cut-row">cut level ` +
      `<input data-action="set-cut" value="${esc(state.cutLevel)}" ` +
      `placeholder="0.91" size="6"></label>`,
  );
  for (const spec of schema.dimensions) {
    const r = state.rows[spec.id];
    if (!r || r.mode !== "optimize") continue;
    parts.push(
      `<div class="threshold-row" data-dim="${esc(spec.id)}">` +
        `<span>${esc(spec.id)}</span>` +
        `<input data-action="set-threshold" data-dim="${esc(spec.id)}" data-key="q" ` +
        `value="${esc(r.q)}" placeholder="1% of span" size="8">` +
        `<input data-action="set-threshold" data-dim="${esc(spec.id)}" data-key="p" ` +
        `value="${esc(r.p)}" placeholder="5% of span" size="8">` +
        `<input data-action="set-threshold" data-dim="${esc(spec.id)}" data-key="v" ` +
        `value="${esc(r.v)}" placeholder="60% of span" size="8"${r.noVeto ? " disabled" : ""}>` +
        `<label><input type="checkbox" data-action="set-no-veto" data-dim="${esc(spec.id)}"` +
        `${r.noVeto ? " checked" : ""}> no veto</label>` +
        `</div>`,
    );
  }
  parts.push("</details>");
  return parts.join("\n");
}

export function renderStagedCounts(result: ResultJson): string {
  return (
    `<div class="staged-counts">` +
    `<span class="stage">filtered <b>${result.filtered_count}</b></span> → ` +
    `<span class="stage">skyline <b>${result.skyline_count}</b></span> → ` +
    `<span class="stage">final <b>${result.final_count}</b></span>` +
    `</div>`
  );
}

export type SortState = { dim: string; dir: "asc" | "desc" } | null;

export function sortedFinal(result: ResultJson, sort: SortState): ServiceJson[] {
  const rows = [...result.final];
  if (sort === null) return rows;
  const { dim, dir } = sort;
  rows.sort((a, b) => {
    const da = a.dims[dim] ?? 0;
    const db = b.dims[dim] ?? 0;
    return dir === "asc" ? da - db : db - da;
  });
  return rows;
}

function dimColumns(result: ResultJson): string[] {
  return result.settings_used.criteria.map((c) => c.dim);
}

export function renderFinalTable(result: ResultJson, sort: SortState): string {
  const dims = dimColumns(result);
  const heads = dims
    .map((dim) => {
      const mark = sort && sort.dim === dim ? (sort.dir === "asc" ? " ▴" : " ▾") : "";
      return `<th data-action="sort" data-dim="${esc(dim)}">${esc(dim)}${mark}</th>`;
    })
    .join("");
  const body = sortedFinal(result, sort)
    .map((svc) => {
      const cells = dims.map((dim) => `<td>${fmt(svc.dims[dim])}</td>`).join("");
      return `<tr><td>${esc(svc.id)}</td><td>${esc(svc.name)}</td>${cells}</tr>`;
    })
    .join("\n");
  return (
    `<table class="final-table"><thead><tr><th>id</th><th>name</th>${heads}</tr></thead>` +
    `<tbody>\n${body}\n</tbody></table>`
  );
}

// Skyline rows that ELECTRE eliminated are kept visible and flagged.
export function renderDiffTable(result: ResultJson): string {
  const dims = dimColumns(result);
  const finalIds = new Set(result.final.map((svc) => svc.id));
  const heads = dims.map((dim) => `<th>${esc(dim)}</th>`).join("");
  const body = result.skyline
    .map((svc) => {
      const eliminated = !finalIds.has(svc.id);
      const cells = dims.map((dim) => `<td>${fmt(svc.dims[dim])}</td>`).join("");
      return (
        `<tr class="${eliminated ? "eliminated" : "kept"}">` +
        `<td>${esc(svc.id)}</td><td>${eliminated ? "eliminated" : "kept"}</td>${cells}</tr>`
      );
    })
    .join("\n");
  return (
    `<table class="diff-table"><thead><tr><th>id</th><th>outcome</th>${heads}</tr></thead>` +
    `<tbody>\n${body}\n</tbody></table>`
  );
}

function fmt(value: number | undefined): string {
  if (value === undefined) return "";
  return Number.isInteger(value) ? String(value) : value.toFixed(2);
}

export function renderResultPanes(
  current: ResultJson | null,
  previous: ResultJson | null,
  opts: { sort: SortState; diff: boolean },
): string {
  if (current === null) return '<p class="empty">no result yet</p>';
  const main =
    renderStagedCounts(current) +
    (opts.diff ? renderDiffTable(current) : renderFinalTable(current, opts.sort));
  const prev = previous
    ? `<div class="previous-pane"><h3>previous</h3>${renderStagedCounts(previous)}</div>`
    : "";
  return `<div class="current-pane">${main}</div>${prev}`;
}

export function renderErrorBanner(error: UiError): string {
  if (error.kind === "validation") {
    const items = error.issues
      .map((issue) => `<li><code>${esc(issue.field)}</code> ${esc(issue.message)}</li>`)
      .join("");
    return `<div class="banner error">invalid query:<ul>${items}</ul></div>`;
  }
  if (error.kind === "api") {
    const field = error.field ? ` <code>${esc(error.field)}</code>` : "";
    return (
      `<div class="banner error">request rejected (${error.status} ${esc(error.code)}):` +
      `${field} ${esc(error.message)}</div>`
    );
  }
  return (
    `<div class="banner error network">service unreachable: ${esc(error.message)} ` +
    `<button data-action="retry">retry</button></div>`
  );
}

export function renderSchemaFailure(message: string): string {
  return (
    `<div class="banner error blocking">could not load the catalog schema: ` +
    `${esc(message)} <button data-action="retry-schema">retry</button></div>`
  );
}
