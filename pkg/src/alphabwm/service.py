"""Stateless HTTP JSON API for solving and consistency analysis."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .consistency import ci_table
from .model import (SCALE, SCALE_DESCRIPTIONS, AlphaGrid, Fpcs,
                    ValidationError, parse_document, uniform_grid)
from .reporting import consistency_payload, solve_payload
from .solver import SolverError, SolverOptions

SOLVE_TIMEOUT_S = 30.0


def _ok(result) -> JSONResponse:
    return JSONResponse({"ok": True, "result": result})


def _err(status: int, code: str, message: str,
         field_path: str = None) -> JSONResponse:
    return JSONResponse(
        {"ok": False,
         "error": {"code": code, "message": message, "field_path": field_path}},
        status_code=status)


def _grid_from_body(body: dict) -> AlphaGrid:
    m = body.get("m")
    grid = body.get("grid")
    if m is not None and grid is not None:
        raise ValidationError("m", "specify either m or grid, not both")
    if grid is not None:
        if not isinstance(grid, list) or not all(
                isinstance(x, (int, float)) for x in grid):
            raise ValidationError("grid", "must be a list of numbers")
        try:
            return AlphaGrid(tuple(float(x) for x in grid))
        except ValueError as exc:
            raise ValidationError("grid", str(exc)) from None
    if m is None:
        m = 17
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValidationError("m", "must be an integer >= 2")
    return uniform_grid(m)


def _opts_from_body(body: dict) -> SolverOptions:
    seed = body.get("seed", 42)
    tol = body.get("tol", 5e-4)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValidationError("seed", "must be an integer")
    if not isinstance(tol, (int, float)) or tol <= 0:
        raise ValidationError("tol", "must be a positive number")
    return SolverOptions(seed=seed, optimality_tol=float(tol))


def create_app(threshold: float = 0.1) -> FastAPI:
    app = FastAPI(title="alphabwm", docs_url=None, redoc_url=None)
    executor = ThreadPoolExecutor(max_workers=8)

    async def _json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise ValidationError("", "request body must be a JSON object")
        if not isinstance(body, dict):
            raise ValidationError("", "request body must be a JSON object")
        return body

    def _run(fn, *args, **kwargs):
        future = executor.submit(fn, *args, **kwargs)
        return future.result(timeout=SOLVE_TIMEOUT_S)

    @app.post("/api/solve")
    async def api_solve(request: Request):
        try:
            body = await _json_body(request)
            grid = _grid_from_body(body)
            opts = _opts_from_body(body)
            system = parse_document(
                {k: v for k, v in body.items()
                 if k not in ("m", "grid", "seed", "tol", "consistency")})
            if (body.get("consistency") and isinstance(system, Fpcs)
                    and system.degenerate):
                return _err(422, "degenerate_best_worst",
                            "consistency bounds are undefined when best and "
                            "worst are judged equally preferable",
                            "best_to_others")
            result = _run(solve_payload, system, grid, opts)
        except ValidationError as exc:
            return _err(400, "validation_error", exc.message, exc.field_path)
        except SolverError as exc:
            return _err(500, "solver_error", str(exc))
        except FutureTimeout:
            return _err(504, "timeout", "solve exceeded the 30 s limit")
        return _ok(result)

    @app.post("/api/consistency")
    async def api_consistency(request: Request):
        try:
            body = await _json_body(request)
            grid_points = body.get("grid_points", 17)
            if (not isinstance(grid_points, int) or isinstance(grid_points, bool)
                    or grid_points < 2):
                raise ValidationError("grid_points", "must be an integer >= 2")
            req_threshold = body.get("threshold", threshold)
            if not isinstance(req_threshold, (int, float)):
                raise ValidationError("threshold", "must be a number")
            system = parse_document(
                {k: v for k, v in body.items()
                 if k not in ("grid_points", "threshold")})
            if not isinstance(system, Fpcs):
                raise ValidationError(
                    "root", "consistency analysis expects a flat system")
            result = _run(consistency_payload, system,
                          uniform_grid(grid_points),
                          threshold=float(req_threshold))
        except ValidationError as exc:
            return _err(400, "validation_error", exc.message, exc.field_path)
        except SolverError as exc:
            return _err(500, "solver_error", str(exc))
        except FutureTimeout:
            return _err(504, "timeout", "analysis exceeded the 30 s limit")
        return _ok(result)

    @app.get("/api/scale")
    async def api_scale():
        return _ok([{"label": label,
                     "tfn": [t.a, t.b, t.c],
                     "description": SCALE_DESCRIPTIONS[label]}
                    for label, t in SCALE.items()])

    @app.get("/api/ci-table")
    async def api_ci_table():
        return _ok(ci_table())

    @app.get("/healthz")
    async def healthz():
        return {"ok": True}

    static_dir = os.path.join(os.path.dirname(os.path.dirname(
        os.path.dirname(os.path.abspath(__file__)))), "frontend", "dist")
    if os.path.isdir(static_dir):
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="static")

    return app
