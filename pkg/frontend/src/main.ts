// Browser entry point: wires the pure modules to the DOM.
//
// Serve this directory statically (npm run serve) and point it at a
// running service with ?api=http://host:port (default localhost:8000).

import { ApiClient } from "./api.js";
import { QuerySession } from "./controller.js";
import {
  initialState,
  setFixedValue,
  setImportance,
  setMode,
  setNoVeto,
  setThreshold,
  UiQueryState,
} from "./queryState.js";
import {
  renderErrorBanner,
  renderForm,
  renderResultPanes,
  renderSchemaFailure,
  SortState,
} from "./render.js";
import { SchemaResponse } from "./types.js";

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";
const client = new ApiClient(apiBase);
const session = new QuerySession(client);

let schema: SchemaResponse | null = null;
let state: UiQueryState | null = null;
let sort: SortState = null;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function render(): void {
  if (!schema || !state) return;
  el("form").innerHTML = renderForm(schema, state);
  const diffToggle =
    `<label class="diff-toggle"><input type="checkbox" data-action="toggle-diff"` +
    `${state.diffView ? " checked" : ""}> show skyline vs final diff</label>`;
  el("results").innerHTML =
    diffToggle + renderResultPanes(session.current, session.previous, {
      sort,
      diff: state.diffView,
    });
  el("error").innerHTML = session.lastError ? renderErrorBanner(session.lastError) : "";
}

async function submit(): Promise<void> {
  if (!schema || !state) return;
  const outcome = await session.submit(state, schema);
  if (outcome.kind !== "stale") render();
}

function onChange(event: Event): void {
  if (!state) return;
  const target = event.target as HTMLElement;
  const action = target.dataset["action"];
  if (!action) return;
  const dim = target.dataset["dim"] ?? "";
  if (action === "set-mode") {
    setMode(state, dim, (target as HTMLInputElement).value === "optimize" ? "optimize" : "ignore");
  } else if (action === "set-importance") {
    setImportance(state, dim, (target as HTMLSelectElement).value as never);
  } else if (action === "set-fixed") {
    setFixedValue(state, target.dataset["attr"] ?? "", (target as HTMLSelectElement).value);
  } else if (action === "set-threshold") {
    setThreshold(state, dim, target.dataset["key"] as "q" | "p" | "v", (target as HTMLInputElement).value);
  } else if (action === "set-no-veto") {
    setNoVeto(state, dim, (target as HTMLInputElement).checked);
  } else if (action === "set-cut") {
    state.cutLevel = (target as HTMLInputElement).value;
  } else if (action === "toggle-diff") {
    state.diffView = (target as HTMLInputElement).checked;
  } else {
    return;
  }
  // keep <details> from collapsing while typing thresholds
  state.advancedOpen = document.querySelector("details.advanced")?.hasAttribute("open") ?? false;
  render();
}

function onClick(event: Event): void {
  const target = (event.target as HTMLElement).closest("[data-action]") as HTMLElement | null;
  if (!target) return;
  const action = target.dataset["action"];
  if (action === "submit") void submit();
  else if (action === "sort") {
    const dim = target.dataset["dim"] ?? "";
    sort = sort && sort.dim === dim && sort.dir === "asc"
      ? { dim, dir: "desc" }
      : { dim, dir: "asc" };
    render();
  } else if (action === "retry") void submit();
  else if (action === "retry-schema") void bootstrap();
}

async function bootstrap(): Promise<void> {
  try {
    schema = await client.getSchema();
  } catch (err) {
    el("form").innerHTML = renderSchemaFailure(String(err));
    return;
  }
  state = initialState(schema);
  try {
    const stats = await client.getStats();
    el("header-stats").textContent =
      `${stats.count} services, ${schema.dimensions.length} dimensions (${apiBase})`;
  } catch {
    el("header-stats").textContent = apiBase;
  }
  render();
}

document.addEventListener("change", onChange);
document.addEventListener("click", onClick);
void bootstrap();
