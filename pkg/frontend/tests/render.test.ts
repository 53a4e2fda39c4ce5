import { describe, expect, test } from "vitest";

import {
  renderDiffTable,
  renderErrorBanner,
  renderFinalTable,
  renderForm,
  renderResultPanes,
  renderSchemaFailure,
  renderStagedCounts,
  sortedFinal,
} from "../src/render.js";
import { initialState, setMode, setNoVeto, setThreshold } from "../src/queryState.js";
import { ResultJson } from "../src/types.js";
import { testSchema } from "./helpers.js";

const schema = testSchema();

function sampleResult(): ResultJson {
  const svc = (id: string, latency: number, bandwidth: number) => ({
    id,
    name: `box ${id}`,
    fixed: { provider: "Google" },
    dims: { latency, bandwidth },
  });
  const skyline = [svc("s1", 30, 2), svc("s2", 10, 1.25), svc("s3", 20, 3.5)];
  return {
    filtered_count: 120,
    skyline_count: 3,
    final_count: 2,
    skyline,
    final: [skyline[0]!, skyline[2]!],
    timings_ms: { skyline: 2.1, electre: 0.4 },
    settings_used: {
      cut_level: 0.91,
      reinforced_veto: false,
      criteria: [
        { dim: "latency", weight: 3, q: 1, p: 5, v: 60 },
        { dim: "bandwidth", weight: 2, q: 0.1, p: 0.5, v: 6 },
      ],
    },
  };
}

describe("form", () => {
  test("one select per fixed attribute, each offering any", () => {
    const html = renderForm(schema, initialState(schema));
    expect(html.match(/data-action="set-fixed"/g)).toHaveLength(2);
    expect(html.match(/<option value="">any<\/option>/g)).toHaveLength(2);
    expect(html).toContain('data-attr="provider"');
    expect(html).toContain(">IaaS</option>");
  });

  test("each dimension gets an exclusive ignore/optimize pair and a sense arrow", () => {
    const html = renderForm(schema, initialState(schema));
    expect(html.match(/type="radio"/g)).toHaveLength(6);
    expect(html).toContain('name="mode-latency"');
    expect(html).toContain("↓");
    expect(html).toContain("↑");
  });

  test("importance control is disabled until the dimension is optimized", () => {
    const state = initialState(schema);
    let html = renderForm(schema, state);
    expect(html).toContain('data-action="set-importance" data-dim="latency" disabled');
    setMode(state, "latency", "optimize");
    html = renderForm(schema, state);
    expect(html).toContain('data-action="set-importance" data-dim="latency">');
    expect(html).toContain(">moderately important</option>");
  });

  test("submit stays disabled while the state does not project to a query", () => {
    const state = initialState(schema);
    let html = renderForm(schema, state);
    expect(html).toContain('data-action="submit" disabled');
    expect(html).toContain("pick at least one dimension");
    setMode(state, "latency", "optimize");
    html = renderForm(schema, state);
    expect(html).toContain('data-action="submit">');
    setThreshold(state, "latency", "q", "oops");
    html = renderForm(schema, state);
    expect(html).toContain('data-action="submit" disabled');
  });

  test("advanced panel shows server defaults as placeholders only for optimized dims", () => {
    const state = initialState(schema);
    setMode(state, "bandwidth", "optimize");
    const html = renderForm(schema, state);
    expect(html).toContain('placeholder="0.91"');
    expect(html.match(/placeholder="1% of span"/g)).toHaveLength(1);
    expect(html).toContain('data-dim="bandwidth" data-key="v"');
    expect(html).not.toContain('data-dim="latency" data-key="q"');
  });

  test("ticking no-veto disables the veto input", () => {
    const state = initialState(schema);
    setMode(state, "latency", "optimize");
    setNoVeto(state, "latency", true);
    const html = renderForm(schema, state);
    expect(html).toMatch(/data-key="v"[^>]*disabled/);
  });
});

describe("results", () => {
  test("staged counts show all three stages", () => {
    const html = renderStagedCounts(sampleResult());
    expect(html).toContain("filtered <b>120</b>");
    expect(html).toContain("skyline <b>3</b>");
    expect(html).toContain("final <b>2</b>");
  });

  test("final table has sortable dimension headers and formatted cells", () => {
    const html = renderFinalTable(sampleResult(), null);
    expect(html).toContain('<th data-action="sort" data-dim="latency">latency</th>');
    expect(html).toContain("<td>30</td>");
    expect(html).toContain("<td>3.50</td>"); // fractional values get two decimals
  });

  test("sortedFinal orders by the chosen dimension in either direction", () => {
    const result = sampleResult();
    expect(sortedFinal(result, null).map((s) => s.id)).toEqual(["s1", "s3"]);
    expect(sortedFinal(result, { dim: "latency", dir: "asc" }).map((s) => s.id)).toEqual(["s3", "s1"]);
    expect(sortedFinal(result, { dim: "latency", dir: "desc" }).map((s) => s.id)).toEqual(["s1", "s3"]);
    // sorting is non-destructive
    expect(result.final.map((s) => s.id)).toEqual(["s1", "s3"]);
  });

  test("sort marker follows the active column", () => {
    const html = renderFinalTable(sampleResult(), { dim: "bandwidth", dir: "desc" });
    expect(html).toContain("bandwidth ▾");
    expect(html).not.toContain("latency ▾");
  });

  test("diff view flags exactly the rows the refinement removed", () => {
    const html = renderDiffTable(sampleResult());
    expect(html.match(/class="eliminated"/g)).toHaveLength(1);
    expect(html.match(/class="kept"/g)).toHaveLength(2);
    expect(html).toMatch(/class="eliminated"><td>s2<\/td>/);
  });

  test("result panes keep the previous run next to the current one", () => {
    expect(renderResultPanes(null, null, { sort: null, diff: false })).toContain("no result yet");
    const current = sampleResult();
    const previous = { ...sampleResult(), filtered_count: 77 };
    const html = renderResultPanes(current, previous, { sort: null, diff: false });
    expect(html).toContain('class="current-pane"');
    expect(html).toContain('class="previous-pane"');
    expect(html).toContain("filtered <b>77</b>");
    const diff = renderResultPanes(current, null, { sort: null, diff: true });
    expect(diff).toContain('class="diff-table"');
    expect(diff).not.toContain("previous-pane");
  });
});

describe("banners", () => {
  test("validation errors list each field path", () => {
    const html = renderErrorBanner({
      kind: "validation",
      issues: [{ field: "electre.cut_level", message: "out of range" }],
    });
    expect(html).toContain("<code>electre.cut_level</code>");
    expect(html).toContain("out of range");
  });

  test("api rejections show status, code and field", () => {
    const html = renderErrorBanner({
      kind: "api",
      status: 422,
      code: "unknown_dimension",
      message: "no dimension named speed",
      field: "optimize[0].dim",
    });
    expect(html).toContain("422 unknown_dimension");
    expect(html).toContain("<code>optimize[0].dim</code>");
  });

  test("network failures offer a retry", () => {
    const html = renderErrorBanner({ kind: "network", message: "fetch failed" });
    expect(html).toContain('data-action="retry"');
  });

  test("schema load failure is a blocking banner with retry", () => {
    const html = renderSchemaFailure("connection refused");
    expect(html).toContain("could not load the catalog schema");
    expect(html).toContain('data-action="retry-schema"');
    expect(html).toContain("connection refused");
  });
});
