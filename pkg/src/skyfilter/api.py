"""HTTP/JSON query service over an immutable catalog snapshot.

Endpoints:
  POST /query           run the selection pipeline on a query JSON body
  GET  /schema          dimension specs + observed fixed-attribute values
  GET  /catalog/stats   service count and per-dimension min/max

All errors share one body shape: {"code": str, "message": str, "field"?: str}
with code drawn from a closed set (malformed_json, invalid_query,
unknown_attribute, unknown_dimension, zero_weight, invalid_request,
not_found, internal_error). The service never mutates the catalog; every
request is an independent pure computation, so concurrent use is safe.
CORS is permissively enabled for local UI development.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .catalog import Catalog
from .errors import (
    MissingDimensionError,
    QueryValidationError,
    UnknownAttributeError,
    ZeroWeightError,
)
from .pipeline import query_from_dict, result_to_dict, run_query

__all__ = ["ApiError", "create_app"]

ERROR_CODES = frozenset(
    {
        "malformed_json",
        "invalid_query",
        "unknown_attribute",
        "unknown_dimension",
        "zero_weight",
        "invalid_request",
        "not_found",
        "internal_error",
    }
)


@dataclass(frozen=True)
class ApiError:
    """Wire-level error: HTTP status, machine-readable code, human message,
    and optionally the offending field path."""

    status: int
    code: str
    message: str
    field: str | None = None

    def __post_init__(self):
        assert self.status in (400, 404, 422, 500)
        assert self.code in ERROR_CODES

    def response(self) -> JSONResponse:
        body = {"code": self.code, "message": self.message}
        if self.field is not None:
            body["field"] = self.field
        return JSONResponse(status_code=self.status, content=body)


def create_app(catalog: Catalog) -> FastAPI:
    """Build the service around one loaded catalog."""
    app = FastAPI(title="skyfilter", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        if exc.status_code == 404:
            return ApiError(404, "not_found", "no such endpoint").response()
        if exc.status_code == 405:
            return ApiError(404, "not_found", "method not supported on this endpoint").response()
        return ApiError(500, "internal_error", str(exc.detail)).response()

    @app.exception_handler(Exception)
    async def _unhandled(request: Request, exc: Exception):
        return ApiError(500, "internal_error", "internal error").response()

    @app.post("/query")
    async def post_query(request: Request):
        limit_raw = request.query_params.get("limit")
        limit = None
        if limit_raw is not None:
            try:
                limit = int(limit_raw)
            except ValueError:
                limit = -1
            if limit < 0:
                return ApiError(
                    422, "invalid_request", "limit must be a non-negative integer", "limit"
                ).response()
        body = await request.body()
        try:
            obj = json.loads(body)
        except json.JSONDecodeError as exc:
            return ApiError(400, "malformed_json", f"body is not valid JSON: {exc.msg}").response()
        try:
            query = query_from_dict(obj)
            result = run_query(catalog, query)
        except QueryValidationError as exc:
            return ApiError(422, "invalid_query", exc.args[0], exc.field).response()
        except UnknownAttributeError as exc:
            return ApiError(422, "unknown_attribute", str(exc), "fixed").response()
        except MissingDimensionError as exc:
            return ApiError(422, "unknown_dimension", str(exc), "optimize").response()
        except ZeroWeightError as exc:
            return ApiError(422, "zero_weight", str(exc), "optimize").response()
        payload = result_to_dict(result, catalog)
        if limit is not None:
            payload["skyline"] = payload["skyline"][:limit]
            payload["final"] = payload["final"][:limit]
        return JSONResponse(payload)

    @app.get("/schema")
    async def get_schema():
        vocab = {attr: set() for attr in catalog.fixed_attributes}
        for svc in catalog.services:
            for attr in catalog.fixed_attributes:
                vocab[attr].add(svc.fixed[attr])
        return JSONResponse(
            {
                "dimensions": [
                    {
                        "id": spec.id,
                        "sense": spec.sense.value,
                        "range_lo": spec.range_lo,
                        "range_hi": spec.range_hi,
                        "description": spec.description,
                    }
                    for spec in catalog.dimensions
                ],
                "fixed_attributes": {attr: sorted(values) for attr, values in vocab.items()},
            }
        )

    @app.get("/catalog/stats")
    async def get_stats():
        dims = {}
        for spec in catalog.dimensions:
            if catalog.services:
                values = [svc.dims[spec.id] for svc in catalog.services]
                dims[spec.id] = {"min": min(values), "max": max(values)}
            else:
                dims[spec.id] = {"min": None, "max": None}
        return JSONResponse({"count": len(catalog.services), "dimensions": dims})

    return app
