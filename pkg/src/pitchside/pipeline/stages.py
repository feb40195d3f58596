"""The two pipeline stages: entity alignment, then knowledge refinement.

Stage one turns anonymized commentary into entity-aligned commentary by
asking a reasoner client to pick the player (and thereby the team) from
the active lineups.  Stage two renders a refinement prompt carrying
validated external statistics and the internal game context, and takes
the client's text as the knowledge-enhanced commentary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..clock import Clock
from ..errors import (
    MalformedResponse,
    PitchsideError,
    WrongQuestionCount,
)
from ..events.state import replay
from ..events.types import (
    CARD_KINDS,
    EventKind,
    GameState,
    MatchEvent,
    MatchLog,
    MatchMeta,
    PlayerRef,
    SCORING_KINDS,
    Side,
    TeamSide,
)
from ..grounding import FrameRelevance
from ..scene.types import SceneReport
from ..statbase.engine import StatAnswer, execute, validate_answers
from ..statbase.parser import parse_query
from ..statbase.query import print_query
from ..statbase.store import StatStore, player_background
from .answers import AlignmentAnswer, parse_alignment
from .clients import ReasonerClient, ReasonerRequest, request_digest
from .context import PromptVariant, assemble_context, player_options
from .stages_types import Commentary, CommentaryStage
from .templates import render_template

QUESTIONS_PER_SEGMENT = 4

_GOAL_METHOD_TEXT = {
    EventKind.GOAL: "open play",
    EventKind.PENALTY_GOAL: "penalty",
    EventKind.HEADER_GOAL: "header",
    EventKind.OWN_GOAL: "own goal",
}


@dataclass(frozen=True)
class SegmentInputs:
    """Everything stage one needs for one 30-second segment.

    ``state`` is the game state replayed to the segment clock
    (strict-before, so the described event itself is not yet visible).
    """

    segment_id: str
    commentary: Commentary
    state: GameState
    scene: SceneReport
    relevance: FrameRelevance
    home: TeamSide
    away: TeamSide
    video_ref: str = ""


@dataclass(frozen=True)
class Stage1Result:
    commentary: Commentary
    player: PlayerRef
    side: Side
    team_name: str
    answer: AlignmentAnswer
    digest: str


def _tag_segment(error: Exception, segment_id: str) -> Exception:
    error.segment_id = segment_id
    if isinstance(error, PitchsideError):
        error.context.setdefault("segment", segment_id)
    return error


def run_stage1(
    segment: SegmentInputs,
    client: ReasonerClient,
    *,
    variant: PromptVariant = PromptVariant.PLAYER_QUERY,
    given_team: str | None = None,
) -> Stage1Result:
    """Align the [PLAYER]/[TEAM] placeholders for one segment."""
    option_set = player_options(segment.state)
    prompt = assemble_context(
        segment.state, segment.scene, segment.relevance, segment.commentary,
        variant, segment.home, segment.away, given_team=given_team,
    )
    request = ReasonerRequest(prompt=prompt, video_ref=segment.video_ref,
                              options=option_set.options)
    try:
        response = client.complete(request)
        answer = parse_alignment(response, option_set.options)
    except Exception as error:
        raise _tag_segment(error, segment.segment_id)

    player, side = option_set.players[answer.predicted]
    team = segment.home if side is Side.HOME else segment.away
    body = (
        segment.commentary.body
        .replace("[PLAYER]", player.name)
        .replace("[TEAM]", team.team_name)
    )
    aligned = Commentary(
        stage=CommentaryStage.ENTITY_ALIGNED,
        body=body,
        clock=segment.commentary.clock,
        event_label=segment.commentary.event_label,
    )
    return Stage1Result(
        commentary=aligned, player=player, side=side,
        team_name=team.team_name, answer=answer,
        digest=request_digest(request),
    )


@dataclass(frozen=True)
class TranslatedQuestion:
    question: str
    dsl: str | None = None
    query: object | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.query is not None


@dataclass(frozen=True)
class QuestionSet:
    questions: tuple[str, ...]
    translations: tuple[TranslatedQuestion, ...]
    digests: tuple[str, ...]


def _meta_values(meta: MatchMeta) -> dict[str, str]:
    return {
        "Team_h": meta.home.team_name,
        "Team_a": meta.away.team_name,
        "League": meta.league,
        "Season": meta.season,
        "Date": meta.kickoff.isoformat(sep=" "),
    }


def generate_questions(
    aligned: Commentary,
    meta: MatchMeta,
    client: ReasonerClient,
) -> QuestionSet:
    """Ask the client for exactly four external-statistics questions and
    translate each into the query DSL; per-question failures are recorded,
    not fatal."""
    values = dict(_meta_values(meta), Commentary=aligned.body)
    prompt = render_template("question_generation", values)
    request = ReasonerRequest(prompt=prompt)
    response = client.complete(request)
    digests = [request_digest(request)]

    questions = _extract_questions(response)
    if len(questions) != QUESTIONS_PER_SEGMENT:
        raise WrongQuestionCount(
            f"expected {QUESTIONS_PER_SEGMENT} questions, got {len(questions)}"
        )

    translations = []
    for question in questions:
        translate_prompt = render_template(
            "nl_to_dsl",
            {"Question": question, "Date": meta.kickoff.date().isoformat()},
        )
        translate_request = ReasonerRequest(prompt=translate_prompt)
        digests.append(request_digest(translate_request))
        dsl: str | None = None
        try:
            lines = [ln.strip() for ln in client.complete(translate_request).splitlines()
                     if ln.strip()]
            if not lines:
                raise MalformedResponse("empty translation")
            dsl = lines[0]
            query = parse_query(dsl)
            translations.append(TranslatedQuestion(question=question, dsl=dsl,
                                                   query=query))
        except PitchsideError as error:
            translations.append(TranslatedQuestion(question=question, dsl=dsl,
                                                   error=str(error)))
    return QuestionSet(questions=tuple(questions),
                       translations=tuple(translations),
                       digests=tuple(digests))


def _extract_questions(response: str) -> list[str]:
    decoder = json.JSONDecoder()
    for start, char in enumerate(response):
        if char != "{":
            continue
        try:
            doc, _ = decoder.raw_decode(response[start:])
        except json.JSONDecodeError:
            continue
        if isinstance(doc, dict) and isinstance(doc.get("questions"), list):
            return [str(q) for q in doc["questions"]]
    raise MalformedResponse("no JSON block with a questions list found")


def _timeline_family(kind: EventKind) -> frozenset[EventKind]:
    if kind in SCORING_KINDS:
        return SCORING_KINDS
    if kind in CARD_KINDS:
        return CARD_KINDS
    return frozenset({kind})


def _event_line(event: MatchEvent, meta: MatchMeta) -> str:
    team = meta.team(event.team).team_name
    line = f"[{event.clock}] {event.kind.value} ({team}"
    if event.actor is not None:
        line += f", {event.actor.name}"
    line += ")"
    return line


def build_internal_knowledge(
    log: MatchLog,
    clock: Clock,
    kind: EventKind,
    side: Side,
    player: PlayerRef | None = None,
    store: StatStore | None = None,
) -> str:
    """Render the internal context block for the event at ``clock``.

    Includes the post-event score, the timeline of events of the current
    type, goal scorer/assist/method where applicable, and the player's
    background when the store knows them.
    """
    state = replay(log, clock, inclusive=True)
    meta = log.meta
    lines = [
        f"Current score: {meta.home.team_name} {state.score_home} - "
        f"{state.score_away} {meta.away.team_name}."
    ]
    family = _timeline_family(kind)
    timeline = [e for e in log.events if e.kind in family and e.clock <= clock]
    label = "/".join(sorted(k.value for k in family))
    if timeline:
        lines.append(f"Timeline of {label} events so far: "
                     + "; ".join(_event_line(e, meta) for e in timeline) + ".")
    else:
        lines.append(f"No {label} events so far.")
    if kind in SCORING_KINDS:
        current = next(
            (e for e in timeline
             if e.clock == clock and e.kind is kind and e.team is side),
            None,
        )
        scorer = current.actor if current is not None else player
        if scorer is not None:
            detail = f"Goal scorer: {scorer.name} (method: {_GOAL_METHOD_TEXT[kind]}"
            if current is not None and current.assist is not None:
                detail += f", assist: {current.assist.name}"
            detail += ")."
            lines.append(detail)
    if player is not None and store is not None:
        try:
            row = player_background(store, player.name)
        except PitchsideError:
            row = None
        if row is not None:
            lines.append(
                f"About {row.name}: nationality {row.nationality}, height "
                f"{row.height_cm} cm, born {row.birthdate.isoformat()}."
            )
    return "\n".join(lines)


def render_external_knowledge(answers: tuple[StatAnswer, ...]) -> str:
    if not answers:
        return "None"
    lines = []
    for answer in answers:
        if answer.count is not None:
            value = str(answer.count)
        elif answer.record is not None:
            wins, draws, losses = answer.record
            value = f"{wins} wins, {draws} draws, {losses} losses"
        else:
            value = "; ".join(
                f"{m.home} {m.score_home}-{m.score_away} {m.away} "
                f"({m.kickoff.date().isoformat()})"
                for m in answer.matches or ()
            ) or "no matches"
        lines.append(f"Q: {print_query(answer.query)} -> A: {value}")
    return "\n".join(lines)


def run_stage2(
    aligned: Commentary,
    internal_knowledge: str,
    external_answers: tuple[StatAnswer, ...],
    meta: MatchMeta,
    client: ReasonerClient,
) -> tuple[Commentary, str]:
    """Refine aligned commentary with validated external and internal
    knowledge; returns the enhanced commentary and the request digest."""
    values = dict(
        _meta_values(meta),
        Commentary=aligned.body,
        Label=aligned.event_label,
        GameTime=str(aligned.clock),
        ExternalKnowledge=render_external_knowledge(external_answers),
        InternalKnowledge=internal_knowledge,
    )
    prompt = render_template("refinement", values)
    request = ReasonerRequest(prompt=prompt)
    response = client.complete(request)
    enhanced = Commentary(
        stage=CommentaryStage.KNOWLEDGE_ENHANCED,
        body=response,
        clock=aligned.clock,
        event_label=aligned.event_label,
    )
    return enhanced, request_digest(request)
