"""Fine-grained shot analysis: segmentation, faces, jerseys, team colors."""

from .colors import (
    AmbiguityReport,
    ColorClaim,
    ColorResolution,
    canonical_color,
    normalize_color,
    resolve_team_colors,
)
from .faces import DEFAULT_FACE_TAU, match_faces
from .report import (
    build_scene_report,
    render_scene,
    scene_report_from_doc,
    scene_report_to_doc,
)
from .shots import (
    DEFAULT_CONTENT_THRESHOLD,
    DEFAULT_VIDEO_FPS,
    content_metric,
    detect_shots,
    keyframe_indices,
    load_features,
)
from .types import (
    CLOSE_VIEWS,
    FaceObservation,
    JerseyRecord,
    SceneReport,
    Shot,
    ViewLabel,
)

__all__ = [
    "AmbiguityReport",
    "CLOSE_VIEWS",
    "ColorClaim",
    "ColorResolution",
    "DEFAULT_CONTENT_THRESHOLD",
    "DEFAULT_FACE_TAU",
    "DEFAULT_VIDEO_FPS",
    "FaceObservation",
    "JerseyRecord",
    "SceneReport",
    "Shot",
    "ViewLabel",
    "build_scene_report",
    "canonical_color",
    "content_metric",
    "detect_shots",
    "keyframe_indices",
    "load_features",
    "match_faces",
    "normalize_color",
    "render_scene",
    "resolve_team_colors",
    "scene_report_from_doc",
    "scene_report_to_doc",
]
