import type { SchemaResponse } from "../src/types.js";

// Small fixed schema for unit tests; the live tests fetch the real one.
export function testSchema(): SchemaResponse {
  return {
    dimensions: [
      { id: "latency", sense: "minimize", range_lo: 0, range_hi: 10000, description: "round-trip time, ms" },
      { id: "bandwidth", sense: "maximize", range_lo: 0, range_hi: 10, description: "link capacity, Gbit/s" },
      { id: "ongoing_cost", sense: "minimize", range_lo: 0.1, range_hi: 2000, description: "monthly charge, USD" },
    ],
    fixed_attributes: {
      provider: ["Amazon", "Google", "IBM"],
      service_model: ["IaaS", "PaaS", "SaaS"],
    },
  };
}
