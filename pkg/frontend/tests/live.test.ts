// End-to-end cycle against a real service instance (started by the
// global setup): form state -> serialized query -> staged counts.

import { beforeAll, describe, expect, test } from "vitest";

import { ApiClient, FetchLike } from "../src/api.js";
import { QuerySession } from "../src/controller.js";
import {
  initialState,
  serializeQuery,
  setFixedValue,
  setImportance,
  setMode,
  setThreshold,
  UiQueryState,
} from "../src/queryState.js";
import { renderResultPanes, renderStagedCounts } from "../src/render.js";
import { ResultJson, SchemaResponse } from "../src/types.js";
import { API_BASE } from "./config.js";

let schema: SchemaResponse;

beforeAll(async () => {
  schema = await new ApiClient(API_BASE).getSchema();
});

function countingClient() {
  let count = 0;
  const counting: FetchLike = (input, init) => {
    count += 1;
    return fetch(input, init);
  };
  return { client: new ApiClient(API_BASE, counting), calls: () => count };
}

function buildState(): UiQueryState {
  const state = initialState(schema);
  const dims = schema.dimensions.map((d) => d.id);
  expect(dims.length).toBeGreaterThanOrEqual(3);
  setMode(state, dims[0]!, "optimize");
  setImportance(state, dims[0]!, "very_important");
  setMode(state, dims[1]!, "optimize");
  setImportance(state, dims[1]!, "slightly_important");
  setMode(state, dims[2]!, "optimize");
  state.cutLevel = "0.9";
  return state;
}

describe("live submit cycle", () => {
  test("the schema advertises dimensions and fixed vocabularies", () => {
    expect(schema.dimensions.length).toBeGreaterThan(0);
    for (const spec of schema.dimensions) {
      expect(["minimize", "maximize"]).toContain(spec.sense);
    }
    expect(Object.keys(schema.fixed_attributes).length).toBeGreaterThan(0);
  });

  test("staged counts rendered from a submit equal a direct post of the same bytes", async () => {
    const state = buildState();
    const body = serializeQuery(state, schema);

    // independent request with exactly the bytes the form projected
    const direct = await fetch(`${API_BASE}/query`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body,
    });
    expect(direct.status).toBe(200);
    const expected = (await direct.json()) as ResultJson;
    expect(expected.filtered_count).toBeGreaterThan(0);
    expect(expected.final_count).toBeLessThanOrEqual(expected.skyline_count);

    const { client } = countingClient();
    const session = new QuerySession(client);
    const outcome = await session.submit(state, schema);
    expect(outcome.kind).toBe("ok");

    const html = renderStagedCounts(session.current!);
    expect(html).toContain(`filtered <b>${expected.filtered_count}</b>`);
    expect(html).toContain(`skyline <b>${expected.skyline_count}</b>`);
    expect(html).toContain(`final <b>${expected.final_count}</b>`);
    expect(session.current!.final.map((s) => s.id)).toEqual(expected.final.map((s) => s.id));
  });

  test("changing importance and resubmitting sends one request and keeps the previous pane", async () => {
    const state = buildState();
    const { client, calls } = countingClient();
    const session = new QuerySession(client);

    expect((await session.submit(state, schema)).kind).toBe("ok");
    const firstResult = session.current!;
    const before = calls();

    setImportance(state, schema.dimensions[0]!.id, "extremely_important");
    expect((await session.submit(state, schema)).kind).toBe("ok");

    expect(calls()).toBe(before + 1);
    expect(session.previous).toBe(firstResult);
    expect(session.current).not.toBe(firstResult);

    const html = renderResultPanes(session.current, session.previous, { sort: null, diff: false });
    expect(html).toContain('class="previous-pane"');
    expect(html).toContain(`filtered <b>${firstResult.filtered_count}</b>`);
  });

  test("identical submits return identical selections", async () => {
    const state = buildState();
    const { client } = countingClient();
    const session = new QuerySession(client);

    expect((await session.submit(state, schema)).kind).toBe("ok");
    const ids = session.current!.final.map((s) => s.id);
    expect((await session.submit(state, schema)).kind).toBe("ok");
    expect(session.current!.final.map((s) => s.id)).toEqual(ids);
    expect(session.previous!.final.map((s) => s.id)).toEqual(ids);
  });

  test("fixed requirements and thresholds survive the round trip", async () => {
    const state = buildState();
    const attrs = Object.keys(schema.fixed_attributes);
    const attr = attrs[0]!;
    const value = schema.fixed_attributes[attr]![0]!;
    setFixedValue(state, attr, value);
    const dim = schema.dimensions[0]!.id;
    setThreshold(state, dim, "q", "2");
    setThreshold(state, dim, "p", "8");

    const { client } = countingClient();
    const session = new QuerySession(client);
    expect((await session.submit(state, schema)).kind).toBe("ok");

    const result = session.current!;
    for (const svc of result.final) {
      expect(svc.fixed[attr]).toBe(value);
    }
    const used = result.settings_used;
    expect(used.cut_level).toBeCloseTo(0.9, 10);
    const criterion = used.criteria.find((c) => c.dim === dim)!;
    expect(criterion.q).toBe(2);
    expect(criterion.p).toBe(8);
  });

  test("the service rejects an unknown dimension with a field path", async () => {
    const bad = JSON.stringify({ fixed: {}, optimize: [{ dim: "speed" }] });
    const resp = await fetch(`${API_BASE}/query`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: bad,
    });
    expect(resp.status).toBe(422);
    const body = (await resp.json()) as { code: string; field?: string };
    expect(body.code).toBe("unknown_dimension");
    expect(body.field).toBe("optimize");
    // the client layer surfaces the same rejection
    const { client } = countingClient();
    await expect(client.postQuery(bad)).rejects.toMatchObject({
      name: "ApiRequestError",
      status: 422,
      body: { code: "unknown_dimension", field: "optimize" },
    });
  });
});
