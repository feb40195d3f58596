"""Two-stage commentary pipeline over pluggable reasoner clients."""

from .answers import AlignmentAnswer, parse_alignment
from .clients import (
    ENDPOINT_ENV_VAR,
    HttpClient,
    ReasonerClient,
    ReasonerRequest,
    RecordedClient,
    RecordingClient,
    ResponseStore,
    canonical_request,
    request_digest,
    resolve_client,
)
from .context import (
    OptionSet,
    PromptVariant,
    TEAM_OPTIONS,
    assemble_context,
    player_hash,
    player_options,
    render_options,
)
from .runner import SegmentOutcome, load_segment_bundle, run_bundle, run_segment
from .stages import (
    QUESTIONS_PER_SEGMENT,
    QuestionSet,
    SegmentInputs,
    Stage1Result,
    TranslatedQuestion,
    build_internal_knowledge,
    generate_questions,
    render_external_knowledge,
    run_stage1,
    run_stage2,
)
from .stages_types import Commentary, CommentaryStage
from .templates import (
    PLACEHOLDER_VOCABULARY,
    TEMPLATE_NAMES,
    load_template,
    render,
    render_template,
)

__all__ = [
    "AlignmentAnswer",
    "Commentary",
    "CommentaryStage",
    "ENDPOINT_ENV_VAR",
    "HttpClient",
    "OptionSet",
    "PLACEHOLDER_VOCABULARY",
    "PromptVariant",
    "QUESTIONS_PER_SEGMENT",
    "QuestionSet",
    "ReasonerClient",
    "ReasonerRequest",
    "RecordedClient",
    "RecordingClient",
    "ResponseStore",
    "SegmentInputs",
    "SegmentOutcome",
    "Stage1Result",
    "TEAM_OPTIONS",
    "TEMPLATE_NAMES",
    "TranslatedQuestion",
    "assemble_context",
    "build_internal_knowledge",
    "canonical_request",
    "generate_questions",
    "load_segment_bundle",
    "load_template",
    "parse_alignment",
    "player_hash",
    "player_options",
    "render",
    "render_external_knowledge",
    "render_options",
    "render_template",
    "request_digest",
    "resolve_client",
    "run_bundle",
    "run_segment",
    "run_stage1",
    "run_stage2",
]
