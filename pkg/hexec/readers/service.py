# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
import time
from typing import List, Sequence

from fastapi import APIRouter, FastAPI, Response, status
from fastapi.responses import JSONResponse
from prometheus_client import REGISTRY, Histogram
from prometheus_fastapi_instrumentator import Instrumentator
from prometheus_fastapi_instrumentator.metrics import _is_duplicated_time_series

from hexec.common.results import HexecExceptionReaderError
from hexec.readers.base import Passage, Reader
from hexec.readers.wire import WireRequest, WireResponse
from hexec.version import NAME, VERSION

logger = logging.getLogger("hexec")

ANSWER_ROUTE = "/answer"
METRICS_ROUTE = "/metrics"
HEALTH_ROUTE_PREFIX = "/health"
HEALTH_ROUTE_STARTUP = "/startup"
HEALTH_ROUTE_READY = "/ready"
HEALTH_ROUTE_LIVE = "/live"

try:
    ANSWER_LATENCY_METRIC = Histogram(
        "hexec_reader_answer_latency",
        "Time spent in the reader per answer request.",
        registry=REGISTRY,
    )
except ValueError as e:
    if not _is_duplicated_time_series(e):
        raise e
    ANSWER_LATENCY_METRIC = None


def encode_passages(question: str, passages: Sequence[Passage]) -> List[str]:
    """
    Model input strings, one per passage, in the "question: title: context:"
    layout. The service hands them to `Reader.answer_encoded`.
    """
    if not passages:
        return [f"question: {question}"]
    return [
        f"question: {question} title: {p.title} context: {p.text}" for p in passages
    ]


def _health_router(reader: Reader) -> APIRouter:
    router = APIRouter(prefix=HEALTH_ROUTE_PREFIX, tags=["Health"])

    # The endpoints are served as soon as the server is up.
    @router.get(HEALTH_ROUTE_STARTUP, status_code=status.HTTP_200_OK)
    def startup_check():
        return {"message": "Startup check succeeded."}

    @router.get(HEALTH_ROUTE_READY, status_code=status.HTTP_200_OK)
    def readiness_check(response: Response):
        message = "Readiness check succeeded."
        if not reader.is_ready():
            response.status_code = status.HTTP_503_SERVICE_UNAVAILABLE
            message = "Readiness check failed."
        return {"message": message}

    @router.get(HEALTH_ROUTE_LIVE, status_code=status.HTTP_200_OK)
    def liveness_check():
        return {"message": "Liveness check succeeded."}

    return router


def _add_prometheus_instrumentator(app: FastAPI):
    Instrumentator(
        excluded_handlers=[
            "/docs",
            "/openapi.json",
            METRICS_ROUTE,
            HEALTH_ROUTE_PREFIX + HEALTH_ROUTE_STARTUP,
            HEALTH_ROUTE_PREFIX + HEALTH_ROUTE_LIVE,
            HEALTH_ROUTE_PREFIX + HEALTH_ROUTE_READY,
        ]
    ).instrument(app).expose(app, endpoint=METRICS_ROUTE)


def create_reader_app(reader: Reader, prometheus_disabled: bool = False) -> FastAPI:
    """
    HTTP service putting `reader` behind the wire protocol.

    POST /answer takes a wire request and returns the ranked candidates.
    Reader failures answer 503; malformed requests are rejected with 422.
    """
    app = FastAPI(title=f"{NAME} reader ({reader.name})", version=VERSION)
    logger.info(
        f"Prometheus client is {'disabled' if prometheus_disabled else 'enabled'}."
    )

    @app.post(ANSWER_ROUTE, response_model=WireResponse)
    def answer(body: WireRequest):
        request = body.to_request()
        inputs = encode_passages(request.question, request.passages)
        logger.debug(f"{len(inputs)} reader input(s): {inputs[0]}")
        start = time.time()
        try:
            candidates = reader.answer_encoded(request, inputs)
        except HexecExceptionReaderError as e:
            logger.error(e.message)
            return JSONResponse(
                status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
                content={"error": e.message},
            )
        finally:
            if ANSWER_LATENCY_METRIC is not None:
                ANSWER_LATENCY_METRIC.observe(time.time() - start)
        ranked = sorted(candidates, key=lambda c: -c.score)[: request.top_k]
        return WireResponse.from_candidates(ranked)

    app.include_router(_health_router(reader))

    @app.get("/")
    async def home():
        return {"message": "OK"}

    # The instrumentator must be the last middleware added.
    if not prometheus_disabled:
        _add_prometheus_instrumentator(app)

    return app
