"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags/arguments), 2 data or
validation error (unreadable files, malformed records, invalid queries).

The skyline and electre subcommands expose the two pipeline stages
separately so they can be composed through files; `skyline | electre`
over the same dimensions and settings produces the same final set as a
one-shot `query`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench as bench_mod
from .catalog import (
    DEFAULT_DIMENSIONS,
    Catalog,
    generate_synthetic,
    load_catalog,
    load_schema,
    save_catalog,
)
from .electre import compute_solution
from .errors import ParseError, QueryValidationError, SkyfilterError
from .pipeline import (
    load_query,
    query_from_dict,
    resolve_settings,
    result_to_dict,
    run_query,
)
from .skyline import DimensionView, compute_skyline_bnl

__all__ = ["main", "run"]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented contract is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="skyfilter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write a synthetic catalog")
    p.add_argument("--n", type=int, required=True, help="number of services")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--out", required=True, help="output file (.jsonl or .csv)")
    p.add_argument("--schema", help="dimension schema JSON (default: built-in)")

    p = sub.add_parser("query", help="run the full selection pipeline")
    p.add_argument("--catalog", required=True)
    p.add_argument("--query-file", required=True, help="query JSON file")
    p.add_argument("--out", required=True, help="result file")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--schema", help="dimension schema JSON (default: built-in)")

    p = sub.add_parser("skyline", help="compute only the skyline stage")
    p.add_argument("--catalog", required=True)
    p.add_argument("--dims", required=True, help="comma-separated dimension ids")
    p.add_argument("--out", required=True, help="output JSONL of surviving services")
    p.add_argument("--schema", help="dimension schema JSON (default: built-in)")

    p = sub.add_parser("electre", help="refine a skyline file (outranking stage only)")
    p.add_argument("--skyline-file", required=True, help="JSONL produced by the skyline subcommand")
    p.add_argument("--settings", required=True,
                   help='settings JSON: {"optimize": [{"dim",...}], "electre": {...}}')
    p.add_argument("--out", required=True, help="output JSONL of surviving services")
    p.add_argument("--schema", help="dimension schema JSON (default: built-in)")

    p = sub.add_parser("bench", help="run a measurement plan")
    p.add_argument("--plan", required=True, help="plan JSON file")
    p.add_argument("--out", required=True, help="report CSV (summary JSON written alongside)")

    p = sub.add_parser("serve", help="start the HTTP query service")
    p.add_argument("--catalog", required=True)
    p.add_argument("--port", type=int, default=None,
                   help="listen port (default: $SKYFILTER_PORT or 8000)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--schema", help="dimension schema JSON (default: built-in)")
    return parser


def _schema_arg(args) -> tuple:
    if getattr(args, "schema", None):
        return load_schema(args.schema)
    return DEFAULT_DIMENSIONS


def _load_catalog_arg(path: str, schema) -> Catalog:
    return load_catalog(path, schema=schema)


def _write_services_jsonl(services, catalog: Catalog, path: str) -> None:
    save_catalog(
        Catalog(dimensions=catalog.dimensions, fixed_attributes=catalog.fixed_attributes,
                services=tuple(services)),
        path,
        fmt="jsonl",
    )


def _cmd_generate(args) -> int:
    schema = _schema_arg(args)
    catalog = generate_synthetic(args.n, schema, args.seed)
    save_catalog(catalog, args.out)
    print(f"wrote {len(catalog)} services to {args.out}", file=sys.stderr)
    return 0


def _format_table(result_dict: dict) -> str:
    lines = [
        f"filtered: {result_dict['filtered_count']}",
        f"skyline:  {result_dict['skyline_count']}",
        f"final:    {result_dict['final_count']}",
        "",
    ]
    final = result_dict["final"]
    if final:
        dims = list(final[0]["dims"].keys())
        header = ["id", "name"] + dims
        rows = [[svc["id"], svc["name"]] + [f"{svc['dims'][d]:.4g}" for d in dims] for svc in final]
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    else:
        lines.append("(final set is empty)")
    return "\n".join(lines) + "\n"


def _cmd_query(args) -> int:
    schema = _schema_arg(args)
    catalog = _load_catalog_arg(args.catalog, schema)
    query = load_query(args.query_file)
    result = run_query(catalog, query)
    payload = result_to_dict(result, catalog)
    with open(args.out, "w", encoding="utf-8") as fh:
        if args.format == "json":
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        else:
            fh.write(_format_table(payload))
    print(
        f"filtered {result.filtered_count} -> skyline {result.skyline_count} "
        f"-> final {result.final_count}",
        file=sys.stderr,
    )
    return 0


def _cmd_skyline(args) -> int:
    schema = _schema_arg(args)
    catalog = _load_catalog_arg(args.catalog, schema)
    dims = [d.strip() for d in args.dims.split(",") if d.strip()]
    if not dims:
        raise QueryValidationError("dims", "at least one dimension id required")
    view = DimensionView.from_schema(catalog, dims)
    skyline = compute_skyline_bnl(catalog.services, view)
    _write_services_jsonl(skyline, catalog, args.out)
    print(f"skyline: {len(skyline)} of {len(catalog)} services", file=sys.stderr)
    return 0


def _cmd_electre(args) -> int:
    schema = _schema_arg(args)
    catalog = _load_catalog_arg(args.skyline_file, schema)
    with open(args.settings, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if isinstance(obj, dict):
        obj.pop("fixed", None)  # accept a full query file; only the stage inputs matter
    query = query_from_dict(obj)
    view = DimensionView.from_schema(catalog, query.dimension_ids)
    settings = resolve_settings(query, catalog.services)
    final = compute_solution(catalog.services, settings, view)
    _write_services_jsonl(final, catalog, args.out)
    print(f"final: {len(final)} of {len(catalog)} services", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    plan = bench_mod.load_plan(args.plan)
    report = bench_mod.run_experiment(plan)
    bench_mod.emit_report(report, args.out)
    print(f"wrote {len(report.rows)} rows to {args.out}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    schema = _schema_arg(args)
    catalog = _load_catalog_arg(args.catalog, schema)
    port = args.port
    if port is None:
        port = int(os.environ.get("SKYFILTER_PORT", "8000"))
    app = create_app(catalog)
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "query": _cmd_query,
    "skyline": _cmd_skyline,
    "electre": _cmd_electre,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (SkyfilterError, ValueError) as exc:
        print(f"skyfilter: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"skyfilter: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
