# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging

from hexec.common.config import READER_KINDS, NormalizationOptions, ReaderSettings
from hexec.common.results import HexecExceptionConfigError
from hexec.readers.base import Reader
from hexec.readers.fixture import FixtureReader
from hexec.readers.oracle import FactStore, OracleReader
from hexec.readers.remote import RemoteReader

logger = logging.getLogger("hexec")


def create_reader(
    settings: ReaderSettings, normalization: NormalizationOptions = None
) -> Reader:
    kind = settings.kind
    if kind not in READER_KINDS:
        raise HexecExceptionConfigError(
            f"Unknown reader '{kind}', expected one of {READER_KINDS}"
        )

    if kind == "oracle":
        if not settings.facts:
            raise HexecExceptionConfigError("The oracle reader needs --facts")
        reader = OracleReader(FactStore.load(settings.facts, normalization))
    elif kind == "fixture":
        if not settings.script:
            raise HexecExceptionConfigError("The fixture reader needs --script")
        reader = FixtureReader.load(settings.script)
    else:
        if not settings.endpoint:
            raise HexecExceptionConfigError("The remote reader needs --endpoint")
        reader = RemoteReader(
            settings.endpoint,
            timeout=settings.timeout,
            retries=settings.retries,
            backoff_factor=settings.backoff_factor,
        )

    logger.info(f"Reader: {reader.name}")
    return reader
