"""Reasoner/refiner client boundary with record-and-replay support.

A request is canonicalized to JSON and hashed; the recorded store maps
hex digests to raw response text.  Replaying from a store makes every
pipeline run a pure function of its inputs, with no model anywhere.
Writing a different response under an existing digest means the store
is corrupt.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import requests

from ..errors import ClientError, CorruptStore

ENDPOINT_ENV_VAR = "PITCHSIDE_ENDPOINT"
RECORDED_PREFIX = "recorded:"


@dataclass(frozen=True, slots=True)
class ReasonerRequest:
    prompt: str
    video_ref: str = ""
    options: tuple[str, ...] = ()


def canonical_request(request: ReasonerRequest) -> str:
    return json.dumps(
        {
            "options": list(request.options),
            "prompt": request.prompt,
            "video": request.video_ref,
        },
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=True,
    )


def request_digest(request: ReasonerRequest) -> str:
    return hashlib.sha256(canonical_request(request).encode("utf-8")).hexdigest()


class ReasonerClient(Protocol):
    def complete(self, request: ReasonerRequest) -> str: ...


class ResponseStore:
    """Append-only digest -> response map persisted as one JSON document.

    Concurrent reads are free; writes are serialized and never remove
    or overwrite an existing entry.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._responses: dict[str, str] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._responses = self._read(self.path)

    @staticmethod
    def _read(path: Path) -> dict[str, str]:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in doc.items()
        ):
            raise CorruptStore(f"{path} is not a digest -> response map")
        return doc

    @classmethod
    def load(cls, path: str | Path) -> "ResponseStore":
        path = Path(path)
        if not path.exists():
            raise ClientError(f"recorded store {path} does not exist")
        return cls(path)

    def __len__(self) -> int:
        return len(self._responses)

    def get(self, digest: str) -> str | None:
        return self._responses.get(digest)

    def put(self, digest: str, response: str) -> None:
        with self._lock:
            existing = self._responses.get(digest)
            if existing is not None:
                if existing != response:
                    raise CorruptStore(
                        f"digest {digest} already maps to a different response"
                    )
                return
            self._responses[digest] = response
            if self.path is not None:
                self.path.write_text(
                    json.dumps(self._responses, indent=2, sort_keys=True,
                               ensure_ascii=False) + "\n",
                    encoding="utf-8",
                )


class RecordedClient:
    """Replays responses from a store; unknown requests are client errors."""

    def __init__(self, store: ResponseStore):
        self.store = store

    def complete(self, request: ReasonerRequest) -> str:
        digest = request_digest(request)
        response = self.store.get(digest)
        if response is None:
            raise ClientError(f"no recorded response for digest {digest}")
        return response


class RecordingClient:
    """Pass-through wrapper persisting every (digest, response) pair."""

    def __init__(self, inner: ReasonerClient, store: ResponseStore):
        self.inner = inner
        self.store = store

    def complete(self, request: ReasonerRequest) -> str:
        response = self.inner.complete(request)
        self.store.put(request_digest(request), response)
        return response


class HttpClient:
    """POSTs the request document to an endpoint; the body is the response.

    The endpoint receives ``{"prompt", "video", "options"}`` as JSON and
    answers with either raw text or ``{"text": "..."}``.
    """

    def __init__(self, endpoint: str, timeout: float = 120.0):
        self.endpoint = endpoint
        self.timeout = timeout

    def complete(self, request: ReasonerRequest) -> str:
        try:
            reply = requests.post(
                self.endpoint,
                json={
                    "prompt": request.prompt,
                    "video": request.video_ref,
                    "options": list(request.options),
                },
                timeout=self.timeout,
            )
            reply.raise_for_status()
        except requests.RequestException as exc:
            raise ClientError(f"endpoint {self.endpoint} failed: {exc}") from exc
        try:
            doc = reply.json()
            if isinstance(doc, dict) and isinstance(doc.get("text"), str):
                return doc["text"]
        except ValueError:
            pass
        return reply.text


def resolve_client(spec: str | None, env: dict | None = None) -> ReasonerClient:
    """Build a client from a CLI spec; the endpoint env var wins over flags."""
    environment = os.environ if env is None else env
    endpoint = environment.get(ENDPOINT_ENV_VAR)
    if endpoint:
        return HttpClient(endpoint)
    if spec is None:
        raise ClientError("no client configured (flag or environment)")
    if spec.startswith(RECORDED_PREFIX):
        return RecordedClient(ResponseStore.load(spec[len(RECORDED_PREFIX):]))
    return HttpClient(spec)
