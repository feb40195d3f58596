"""Frame-level event grounding from exported cross-attention.

An upstream captioning encoder exports a cross-attention tensor of
shape (layers, heads, queries, frames) together with the L2 norm of
each query output.  Averaging attention over layers and heads, weighting
queries by their normalized output norms, and summing over queries
yields a frame-wise relevance vector: the arousal of each frame in
generating the narration.  The top-scoring frames serve as coarse
grounding guidance for downstream prompts.

All accumulation runs in double precision regardless of input dtype.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import AllZeroNorms, DimensionMismatch

DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class AttentionBundle:
    """Exported attention tensor (L, H, Q, N) plus per-query output norms (Q,)."""

    attention: np.ndarray
    query_norms: np.ndarray

    def __post_init__(self) -> None:
        attention = np.asarray(self.attention, dtype=np.float64)
        norms = np.asarray(self.query_norms, dtype=np.float64)
        if attention.ndim != 4:
            raise DimensionMismatch(
                f"attention must have 4 axes (L, H, Q, N), got {attention.ndim}"
            )
        if norms.ndim != 1 or norms.shape[0] != attention.shape[2]:
            raise DimensionMismatch(
                f"query_norms length {norms.shape} does not match Q={attention.shape[2]}"
            )
        if np.any(attention < 0):
            raise DimensionMismatch("attention entries must be non-negative")
        if np.any(norms < 0):
            raise DimensionMismatch("query norms must be non-negative")
        object.__setattr__(self, "attention", attention)
        object.__setattr__(self, "query_norms", norms)

    @property
    def layers(self) -> int:
        return self.attention.shape[0]

    @property
    def heads(self) -> int:
        return self.attention.shape[1]

    @property
    def queries(self) -> int:
        return self.attention.shape[2]

    @property
    def frames(self) -> int:
        return self.attention.shape[3]

    @classmethod
    def from_flat(
        cls,
        layers: int,
        heads: int,
        queries: int,
        frames: int,
        attention_flat,
        query_norms,
    ) -> "AttentionBundle":
        flat = np.asarray(attention_flat, dtype=np.float64)
        expected = layers * heads * queries * frames
        if flat.size != expected:
            raise DimensionMismatch(
                f"flat attention has {flat.size} entries, expected "
                f"{layers}*{heads}*{queries}*{frames} = {expected}"
            )
        return cls(
            attention=flat.reshape(layers, heads, queries, frames),
            query_norms=np.asarray(query_norms, dtype=np.float64),
        )


@dataclass(frozen=True)
class FrameRelevance:
    """Aggregated per-frame weights plus the indices of the k largest."""

    weights: np.ndarray
    top_frames: tuple[int, ...]


def mean_attention(bundle: AttentionBundle) -> np.ndarray:
    """Average the attention tensor over layers and heads -> (Q, N)."""
    return bundle.attention.mean(axis=(0, 1))


def query_importance(bundle: AttentionBundle) -> np.ndarray:
    """Normalize query output norms into weights that sum to 1."""
    total = bundle.query_norms.sum()
    if total <= 0.0:
        raise AllZeroNorms("all query output norms are zero")
    return bundle.query_norms / total


def top_k_frames(weights: np.ndarray, k: int) -> tuple[int, ...]:
    """Indices of the k largest weights, descending; ties favor the earlier frame."""
    order = np.argsort(-weights, kind="stable")
    return tuple(int(i) for i in order[: max(k, 0)])


def aggregate(bundle: AttentionBundle, top_k: int = DEFAULT_TOP_K) -> FrameRelevance:
    """Importance-weighted sum of mean attention over queries -> frame weights."""
    weights = query_importance(bundle) @ mean_attention(bundle)
    return FrameRelevance(weights=weights, top_frames=top_k_frames(weights, top_k))


def top_frames_to_seconds(relevance: FrameRelevance, fps: float = 1.0) -> list[float]:
    """Convert top frame indices to seconds, preserving order.

    The relevance vector is normally computed at fps=1, where frame
    index equals second.
    """
    if fps <= 0:
        raise DimensionMismatch(f"fps must be positive, got {fps}")
    return [index / fps for index in relevance.top_frames]


def attention_bundle_from_doc(doc: dict) -> AttentionBundle:
    try:
        return AttentionBundle.from_flat(
            layers=int(doc["layers"]),
            heads=int(doc["heads"]),
            queries=int(doc["queries"]),
            frames=int(doc["frames"]),
            attention_flat=doc["attention"],
            query_norms=doc["query_norms"],
        )
    except KeyError as exc:
        raise DimensionMismatch(f"attention document missing field {exc}") from exc


def load_attention(path: str | Path) -> AttentionBundle:
    """Read an attention file: flat row-major (layer, head, query, frame) order."""
    with open(path, encoding="utf-8") as fh:
        return attention_bundle_from_doc(json.load(fh))


def dump_attention(bundle: AttentionBundle, path: str | Path) -> None:
    doc = {
        "layers": bundle.layers,
        "heads": bundle.heads,
        "queries": bundle.queries,
        "frames": bundle.frames,
        "attention": bundle.attention.ravel().tolist(),
        "query_norms": bundle.query_norms.tolist(),
    }
    Path(path).write_text(json.dumps(doc) + "\n", encoding="utf-8")
