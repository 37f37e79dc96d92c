"""Experiment service backing the browser UI.

Accepts experiment configs over HTTP, runs them one at a time on a FIFO
worker thread, and serves results. The store is in memory and lost on
restart: this is a desk-scale demo service. Response bodies render
numbers exactly as the CLI does, so a finished experiment is numerically
identical to the CLI output for the same config and seed.
"""

from __future__ import annotations

import argparse
import queue
import threading
import time
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

import uvicorn
from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.staticfiles import StaticFiles

from .config import ExperimentConfig, config_from_dict
from .errors import SeqbenchError
from .experiment import ExperimentResult, run_experiment
from .ingest import apply_support_filters, parse_ratings
from .profiling import profile
from .render import config_echo, dumps, profile_document, result_document
from .sequences import build_sequences

PENDING, RUNNING, DONE, FAILED = "pending", "running", "done", "failed"


@dataclass
class ExperimentRecord:
    id: str
    config: ExperimentConfig
    status: str = PENDING
    result: ExperimentResult | None = None
    error: str | None = None
    created_at: str = ""

    def document(self) -> dict:
        doc = {
            "id": self.id,
            "status": self.status,
            "created_at": self.created_at,
            "config": config_echo(self.config.to_dict()),
            "error": self.error,
            "profile": None,
            "reports": None,
        }
        if self.result is not None:
            rendered = result_document(self.result)
            doc["profile"] = rendered["profile"]
            doc["reports"] = rendered["reports"]
        return doc


@dataclass
class ExperimentStore:
    """Thread-safe record store plus a FIFO queue drained by one worker."""

    records: dict[str, ExperimentRecord] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)
    jobs: "queue.Queue[str | None]" = field(default_factory=queue.Queue)

    def create(self, config: ExperimentConfig) -> str:
        record = ExperimentRecord(
            id=uuid.uuid4().hex,
            config=config,
            created_at=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        )
        with self.lock:
            self.records[record.id] = record
        self.jobs.put(record.id)
        return record.id

    def get(self, experiment_id: str) -> ExperimentRecord | None:
        with self.lock:
            return self.records.get(experiment_id)

    def newest_first(self) -> list[ExperimentRecord]:
        with self.lock:
            return list(reversed(self.records.values()))

    def set_status(self, experiment_id: str, status: str, result=None, error=None) -> None:
        with self.lock:
            record = self.records[experiment_id]
            record.status = status
            record.result = result
            record.error = error

    def work_loop(self) -> None:
        while True:
            experiment_id = self.jobs.get()
            if experiment_id is None:
                return
            record = self.get(experiment_id)
            if record is None:
                continue
            self.set_status(experiment_id, RUNNING)
            try:
                result = run_experiment(record.config)
            except SeqbenchError as exc:
                self.set_status(experiment_id, FAILED, error=f"{type(exc).__name__}: {exc}")
            except Exception as exc:  # keep the worker alive on unexpected failures
                self.set_status(experiment_id, FAILED, error=f"internal error: {exc}")
            else:
                self.set_status(experiment_id, DONE, result=result)


def _json_response(document, status_code: int = 200) -> Response:
    return Response(content=dumps(document) + "\n", media_type="application/json", status_code=status_code)


def create_app(data_dir: str = "data", ui_dir: str | None = None) -> FastAPI:
    store = ExperimentStore()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        worker = threading.Thread(target=store.work_loop, daemon=True, name="experiment-worker")
        worker.start()
        yield
        store.jobs.put(None)
        worker.join(timeout=5)

    app = FastAPI(title="seqbench service", lifespan=lifespan)
    app.state.store = store
    base = Path(data_dir)

    @app.post("/api/experiments")
    async def create_experiment(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            raise HTTPException(
                status_code=422,
                detail=[{"field": "", "message": "request body must be valid JSON"}],
            ) from None
        config, errors = config_from_dict(payload)
        if errors:
            raise HTTPException(status_code=422, detail=errors)
        experiment_id = store.create(config)
        return _json_response({"id": experiment_id})

    @app.get("/api/experiments")
    async def list_experiments() -> Response:
        return _json_response([record.document() for record in store.newest_first()])

    @app.get("/api/experiments/{experiment_id}")
    async def get_experiment(experiment_id: str) -> Response:
        record = store.get(experiment_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"no experiment {experiment_id!r}")
        return _json_response(record.document())

    @app.get("/api/datasets")
    async def list_datasets() -> Response:
        entries = []
        if base.is_dir():
            for path in sorted(base.iterdir()):
                if path.is_file():
                    entries.append({"name": path.name, "path": str(path)})
        return _json_response(entries)

    @app.get("/api/datasets/{name}/profile")
    async def dataset_profile(
        name: str,
        delimiter: str = "tab",
        min_user_ratings: int = 0,
        min_item_ratings: int = 0,
        delta_seconds: int = 86400,
    ) -> Response:
        path = base / name
        if name != Path(name).name or not path.is_file():
            raise HTTPException(status_code=404, detail=f"no dataset {name!r}")
        try:
            with open(path, "r", encoding="utf-8") as handle:
                log = parse_ratings(handle, delimiter)
            filtered = apply_support_filters(log, min_user_ratings, min_item_ratings)
            sequence_set = build_sequences(filtered, delta_seconds)
        except SeqbenchError as exc:
            raise HTTPException(status_code=400, detail=f"{type(exc).__name__}: {exc}") from exc
        prof = profile(sequence_set, sequence_set.total_steps)
        return _json_response(profile_document(prof))

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="seqbench-service", description="Run the experiment service.")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--data-dir", default="data", help="directory whose files are listed as datasets")
    parser.add_argument("--ui-dir", default=None, help="serve this directory of static files at /ui")
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args(argv)
    app = create_app(data_dir=args.data_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
