"""End-to-end segment processing and the segment bundle file format.

A bundle references the match log, per-segment scene report, attention
file, and anonymized commentary by path (relative to the bundle).  With
a recorded-response store the whole run is deterministic and replayable
byte for byte.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from ..clock import parse_clock
from ..errors import PitchsideError, SchemaError
from ..events.logio import load_match_log
from ..events.state import replay
from ..events.types import EventKind, MatchLog
from ..grounding import aggregate, load_attention
from ..scene.report import scene_report_from_doc
from ..statbase.engine import execute, validate_answers
from ..statbase.store import StatStore
from .clients import ReasonerClient
from .context import PromptVariant
from .stages import (
    QuestionSet,
    SegmentInputs,
    Stage1Result,
    build_internal_knowledge,
    generate_questions,
    run_stage1,
    run_stage2,
)
from .stages_types import Commentary, CommentaryStage


@dataclass(frozen=True)
class SegmentOutcome:
    segment_id: str
    stage1: Stage1Result
    questions: QuestionSet | None
    aligned: Commentary
    enhanced: Commentary
    kept_answers: int
    discarded_answers: int
    digests: tuple[str, ...]

    def to_doc(self) -> dict:
        return {
            "segment": self.segment_id,
            "aligned": {
                "body": self.aligned.body,
                "player": self.stage1.player.name,
                "team": self.stage1.team_name,
            },
            "enhanced": {"body": self.enhanced.body},
            "questions": list(self.questions.questions) if self.questions else [],
            "translations": [
                {"question": t.question, "dsl": t.dsl, "ok": t.ok, "error": t.error}
                for t in (self.questions.translations if self.questions else ())
            ],
            "answers": {"kept": self.kept_answers, "discarded": self.discarded_answers},
            "digests": list(self.digests),
        }


def run_segment(
    segment: SegmentInputs,
    log: MatchLog,
    client: ReasonerClient,
    store: StatStore | None = None,
    *,
    variant: PromptVariant = PromptVariant.PLAYER_QUERY,
    given_team: str | None = None,
) -> SegmentOutcome:
    """Stage one, question generation, KAG execution, then stage two."""
    stage1 = run_stage1(segment, client, variant=variant, given_team=given_team)
    digests = [stage1.digest]

    questions = None
    answers = ()
    kept = discarded = 0
    if store is not None:
        questions = generate_questions(stage1.commentary, log.meta, client)
        digests.extend(questions.digests)
        raw_answers = []
        for translated in questions.translations:
            if not translated.ok:
                continue
            try:
                raw_answers.append(execute(store, translated.query))
            except PitchsideError:
                continue  # unknown entity or unsupported stat: unanswerable
        validated = validate_answers(raw_answers, log.meta.kickoff)
        answers = validated.kept
        kept, discarded = len(validated.kept), len(validated.discarded)

    label_kind = _label_to_kind(segment.commentary.event_label)
    internal = build_internal_knowledge(
        log, segment.commentary.clock, label_kind, stage1.side,
        player=stage1.player, store=store,
    )
    enhanced, digest2 = run_stage2(stage1.commentary, internal, answers,
                                   log.meta, client)
    digests.append(digest2)
    return SegmentOutcome(
        segment_id=segment.segment_id,
        stage1=stage1,
        questions=questions,
        aligned=stage1.commentary,
        enhanced=enhanced,
        kept_answers=kept,
        discarded_answers=discarded,
        digests=tuple(digests),
    )


def _label_to_kind(label: str) -> EventKind:
    try:
        return EventKind(label.strip().lower().replace(" ", "_").replace("-", "_"))
    except ValueError:
        return EventKind.COMMENTARY


def load_segment_bundle(path: str | Path) -> tuple[MatchLog, list[SegmentInputs]]:
    """Read a bundle document and materialize every segment's inputs.

    Schema::

        {"match_log": "relative/path.json",
         "segments": [{"id", "attention", "scene_report",
                       "commentary": {"body", "label", "clock"},
                       "video"?, "history_k"?}]}
    """
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    base = path.parent
    if "match_log" not in doc or "segments" not in doc:
        raise SchemaError(f"{path}: bundle needs match_log and segments")
    log = load_match_log(base / doc["match_log"])

    segments = []
    for index, seg in enumerate(doc["segments"]):
        where = f"segments[{index}]"
        for key in ("id", "attention", "scene_report", "commentary"):
            if key not in seg:
                raise SchemaError(f"{path}: {where} missing {key!r}")
        commentary_doc = seg["commentary"]
        clock = parse_clock(commentary_doc["clock"])
        commentary = Commentary(
            stage=CommentaryStage.ANONYMIZED,
            body=commentary_doc["body"],
            clock=clock,
            event_label=commentary_doc["label"],
        )
        relevance = aggregate(load_attention(base / seg["attention"]))
        with open(base / seg["scene_report"], encoding="utf-8") as fh:
            scene = scene_report_from_doc(json.load(fh))
        state = replay(log, clock, history_k=int(seg.get("history_k", 1)))
        segments.append(SegmentInputs(
            segment_id=str(seg["id"]),
            commentary=commentary,
            state=state,
            scene=scene,
            relevance=relevance,
            home=log.meta.home,
            away=log.meta.away,
            video_ref=str(seg.get("video", "")),
        ))
    return log, segments


def run_bundle(
    bundle_path: str | Path,
    client: ReasonerClient,
    store: StatStore | None = None,
    *,
    jobs: int = 1,
    variant: PromptVariant = PromptVariant.PLAYER_QUERY,
) -> list[SegmentOutcome]:
    """Process every segment of a bundle; results keep input order."""
    log, segments = load_segment_bundle(bundle_path)
    if jobs <= 1:
        return [run_segment(s, log, client, store, variant=variant)
                for s in segments]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(
            lambda s: run_segment(s, log, client, store, variant=variant),
            segments,
        ))
