import { readFileSync } from "node:fs";

import { describe, expect, test } from "vitest";

import {
  canSubmit,
  initialState,
  optimizedDims,
  projectQuery,
  serializeQuery,
  setFixedValue,
  setImportance,
  setMode,
  setNoVeto,
  setThreshold,
  validate,
} from "../src/queryState.js";
import { testSchema } from "./helpers.js";

const schema = testSchema();

function fixture(name: string): string {
  return readFileSync(new URL(`fixtures/${name}`, import.meta.url), "utf8");
}

describe("initial state", () => {
  test("starts with everything ignored and no fixed choices", () => {
    const s = initialState(schema);
    expect(Object.keys(s.rows)).toEqual(["latency", "bandwidth", "ongoing_cost"]);
    expect(Object.values(s.rows).every((r) => r.mode === "ignore")).toBe(true);
    expect(s.fixed).toEqual({ provider: "", service_model: "" });
    expect(s.cutLevel).toBe("");
    expect(canSubmit(s, schema)).toBe(false);
  });

  test("setters reject unknown names", () => {
    const s = initialState(schema);
    expect(() => setMode(s, "nope", "optimize")).toThrow(/unknown dimension/);
    expect(() => setFixedValue(s, "color", "red")).toThrow(/unknown attribute/);
    expect(() => setImportance(s, "latency", "sort_of" as never)).toThrow(/unknown importance/);
  });
});

describe("validation", () => {
  test("at least one dimension must be optimized", () => {
    const s = initialState(schema);
    const issues = validate(s, schema);
    expect(issues).toHaveLength(1);
    expect(issues[0]!.field).toBe("optimize");
  });

  test("cut level must be in (0.5, 1]", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    for (const bad of ["0.5", "1.2", "0", "abc"]) {
      s.cutLevel = bad;
      expect(validate(s, schema).map((i) => i.field)).toContain("electre.cut_level");
    }
    for (const ok of ["", "0.91", "1", "0.75"]) {
      s.cutLevel = ok;
      expect(validate(s, schema)).toEqual([]);
    }
  });

  test("threshold fields use the server's field paths", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    setThreshold(s, "latency", "q", "-1");
    setThreshold(s, "latency", "v", "junk");
    const fields = validate(s, schema).map((i) => i.field);
    expect(fields).toContain("electre.criteria.latency.q");
    expect(fields).toContain("electre.criteria.latency.v");
  });

  test("indifference must not exceed preference", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    setThreshold(s, "latency", "q", "10");
    setThreshold(s, "latency", "p", "3");
    expect(validate(s, schema).map((i) => i.field)).toContain("electre.criteria.latency.q");
    setThreshold(s, "latency", "p", "10");
    expect(validate(s, schema)).toEqual([]);
  });

  test("no-veto checkbox suppresses veto validation", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    setThreshold(s, "latency", "v", "0");
    expect(validate(s, schema)).toHaveLength(1);
    setNoVeto(s, "latency", true);
    expect(validate(s, schema)).toEqual([]);
  });

  test("thresholds on ignored dimensions are not validated", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    setThreshold(s, "bandwidth", "q", "garbage");
    expect(validate(s, schema)).toEqual([]);
  });
});

describe("projection", () => {
  test("minimal state matches the recorded fixture byte for byte", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    expect(serializeQuery(s, schema)).toBe(fixture("query_minimal.json"));
  });

  test("full state matches the recorded fixture byte for byte", () => {
    const s = initialState(schema);
    setFixedValue(s, "provider", "Google");
    setMode(s, "bandwidth", "optimize");
    setImportance(s, "bandwidth", "slightly_important");
    setMode(s, "latency", "optimize");
    setImportance(s, "latency", "extremely_important");
    s.cutLevel = "0.88";
    setThreshold(s, "latency", "q", "5");
    setNoVeto(s, "latency", true);
    setThreshold(s, "bandwidth", "p", "0.5");
    expect(serializeQuery(s, schema)).toBe(fixture("query_full.json"));
  });

  test("serialization does not depend on edit order", () => {
    const a = initialState(schema);
    setMode(a, "latency", "optimize");
    setMode(a, "ongoing_cost", "optimize");
    setFixedValue(a, "provider", "IBM");
    setFixedValue(a, "service_model", "PaaS");

    const b = initialState(schema);
    setFixedValue(b, "service_model", "PaaS");
    setMode(b, "ongoing_cost", "optimize");
    setFixedValue(b, "provider", "IBM");
    setMode(b, "latency", "optimize");

    expect(serializeQuery(a, schema)).toBe(serializeQuery(b, schema));
    // and repeated serialization of the same state is stable
    expect(serializeQuery(a, schema)).toBe(serializeQuery(a, schema));
  });

  test("optimize entries come out in schema order", () => {
    const s = initialState(schema);
    setMode(s, "ongoing_cost", "optimize");
    setMode(s, "bandwidth", "optimize");
    expect(optimizedDims(s, schema)).toEqual(["bandwidth", "ongoing_cost"]);
    const q = projectQuery(s, schema);
    expect(q.optimize.map((o) => o.dim)).toEqual(["bandwidth", "ongoing_cost"]);
  });

  test("empty threshold fields send nothing, so server defaults apply", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    const q = projectQuery(s, schema);
    expect(q.electre).toBeUndefined();
    expect(q.fixed).toEqual({});
  });

  test("no-veto projects as an explicit null", () => {
    const s = initialState(schema);
    setMode(s, "latency", "optimize");
    setNoVeto(s, "latency", true);
    setThreshold(s, "latency", "v", "999"); // ignored while the box is ticked
    const q = projectQuery(s, schema);
    expect(q.electre?.criteria?.latency).toEqual({ v: null });
  });

  test("projecting an invalid state throws", () => {
    const s = initialState(schema);
    expect(() => projectQuery(s, schema)).toThrow(/invalid form state/);
  });
});
