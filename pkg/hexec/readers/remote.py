# Copyright (c) 2026 The hexec Authors. All rights reserved.
import json
import logging
import threading
from typing import List

import requests
from pydantic import ValidationError
from requests.adapters import HTTPAdapter, Retry

from hexec.common.results import (
    HexecExceptionProtocolError,
    HexecExceptionReaderUnavailable,
)
from hexec.readers.base import Reader, ReaderCandidate, ReaderRequest, rank_candidates
from hexec.readers.wire import WireRequest, WireResponse

logger = logging.getLogger("hexec")

RETRY_STATUS = [500, 502, 503, 504]


class RemoteReader(Reader):
    """
    Reader behind an HTTP endpoint speaking the JSON wire protocol.

    Each thread gets its own requests.Session; server errors and connection
    failures are retried with exponential backoff.
    """

    name = "remote"

    def __init__(
        self,
        endpoint: str,
        timeout: float = 30.0,
        retries: int = 2,
        backoff_factor: float = 0.5,
    ):
        self.endpoint = endpoint
        self.timeout = timeout
        self.retries = retries
        self.backoff_factor = backoff_factor
        self._local = threading.local()

    def _session(self) -> requests.Session:
        session = getattr(self._local, "session", None)
        if session is None:
            retry = Retry(
                total=self.retries,
                backoff_factor=self.backoff_factor,
                status_forcelist=RETRY_STATUS,
                # The request is a pure read, so POST is safe to repeat.
                allowed_methods=frozenset({"POST"}),
                raise_on_status=True,
            )
            session = requests.Session()
            adapter = HTTPAdapter(max_retries=retry)
            session.mount("http://", adapter)
            session.mount("https://", adapter)
            self._local.session = session
        return session

    def answer(self, request: ReaderRequest) -> List[ReaderCandidate]:
        body = WireRequest.from_request(request).dict()
        try:
            response = self._session().post(
                self.endpoint, json=body, timeout=self.timeout
            )
        except requests.exceptions.RequestException as e:
            raise HexecExceptionReaderUnavailable(
                f"Reader at {self.endpoint} unavailable after {self.retries} "
                f"retries: {e}"
            ) from e

        if response.status_code >= 400:
            raise HexecExceptionReaderUnavailable(
                f"Reader at {self.endpoint} returned HTTP {response.status_code}"
            )

        try:
            payload = response.json()
        except (ValueError, json.JSONDecodeError) as e:
            raise HexecExceptionProtocolError(
                f"Reader at {self.endpoint} returned a non-JSON body"
            ) from e

        try:
            parsed = WireResponse.parse_obj(payload)
        except ValidationError as e:
            raise HexecExceptionProtocolError(
                f"Reader at {self.endpoint} returned a malformed response: {e}"
            ) from e

        logger.debug(f"{self.endpoint} {request.question!r} -> {len(parsed.candidates)}")
        return rank_candidates(parsed.to_candidates(), request.top_k)

    def is_ready(self) -> bool:
        return bool(self.endpoint)
