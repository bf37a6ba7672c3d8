# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging

import uvicorn

from hexec.common.config import RunConfig
from hexec.common.results import *
from hexec.readers.factory import create_reader
from hexec.readers.service import create_reader_app

logger = logging.getLogger("hexec")


def serve(config: RunConfig):
    logger.info("> ==== Serve ====")

    if config.reader.kind == "remote":
        raise HexecExceptionArgumentsError(
            "serve needs a local reader (--reader oracle or fixture)"
        )
    reader = create_reader(config.reader, config.execution.normalization)
    app = create_reader_app(reader, prometheus_disabled=config.prometheus_disabled)

    logger.info(f"> Running Uvicorn on {config.host}:{config.port}")
    try:
        uvicorn.run(app, host=config.host, port=int(config.port), log_config=None)
    except Exception as e:
        raise HexecExceptionInternalError(f"Uvicorn failed: {e}") from e

    return RESULT_OK
