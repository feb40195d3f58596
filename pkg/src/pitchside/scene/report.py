"""Scene report assembly and text rendering.

Face sets and jersey records attach only to close-view shots (medium or
close-up); long and out-of-field shots keep their view label alone.
The text rendering feeds the {Scene} prompt placeholder and is byte
deterministic for identical inputs.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..errors import LengthMismatch
from ..events.types import PlayerRef
from .shots import DEFAULT_VIDEO_FPS
from .types import CLOSE_VIEWS, JerseyRecord, SceneReport, Shot, ViewLabel

_VIEW_TEXT = {
    ViewLabel.LONG: "long view",
    ViewLabel.MEDIUM: "medium view",
    ViewLabel.CLOSE_UP: "close-up view",
    ViewLabel.OUT_OF_FIELD: "out-of-field view",
}


def build_scene_report(
    shot_bounds: Sequence[tuple[int, int]],
    views: Sequence[ViewLabel],
    recognized: Mapping[int, Iterable[PlayerRef]] | None = None,
    jerseys: Mapping[int, Iterable[JerseyRecord]] | None = None,
    resolved_colors: tuple[str, str] | None = None,
) -> SceneReport:
    """Merge detection, classification and recognition results per shot."""
    if len(views) != len(shot_bounds):
        raise LengthMismatch(
            f"{len(views)} view labels for {len(shot_bounds)} shots"
        )
    recognized = recognized or {}
    jerseys = jerseys or {}
    shots = tuple(
        Shot(start_frame=start, end_frame=end, view=view)
        for (start, end), view in zip(shot_bounds, views)
    )
    faces_per_shot = []
    jerseys_per_shot = []
    for index, shot in enumerate(shots):
        if shot.view in CLOSE_VIEWS:
            faces_per_shot.append(frozenset(recognized.get(index, ())))
            jerseys_per_shot.append(tuple(jerseys.get(index, ())))
        else:
            faces_per_shot.append(frozenset())
            jerseys_per_shot.append(())
    return SceneReport(
        shots=shots,
        recognized=tuple(faces_per_shot),
        jerseys=tuple(jerseys_per_shot),
        resolved_colors=resolved_colors,
    )


def render_scene(report: SceneReport, fps: float = DEFAULT_VIDEO_FPS) -> str:
    """Deterministic text for the scene placeholder, one line per shot."""
    lines = []
    for index, shot in enumerate(report.shots):
        start_s = shot.start_frame / fps
        end_s = shot.end_frame / fps
        line = f"Shot {index + 1} ({start_s:.1f}s-{end_s:.1f}s): {_VIEW_TEXT[shot.view]}."
        faces = sorted(report.recognized[index], key=lambda p: (p.name, p.number))
        if faces:
            face_text = ", ".join(
                f"{p.name} (#{p.number}, {p.position.value})" for p in faces
            )
            line += f" Recognized faces: {face_text}."
        for record in report.jerseys[index]:
            who = record.name if record.name is not None else f"number {record.number}"
            if record.name is not None and record.number is not None:
                who = f"{record.name} (#{record.number})"
            line += f" Jersey: {who} in {record.color}: {record.action}."
        lines.append(line)
    return "\n".join(lines)


def scene_report_from_doc(doc: dict) -> SceneReport:
    from ..events.logio import player_from_doc  # local import avoids a cycle

    shots = []
    recognized = {}
    jerseys = {}
    for index, shot_doc in enumerate(doc.get("shots", [])):
        shots.append((int(shot_doc["start_frame"]), int(shot_doc["end_frame"])))
        recognized[index] = {
            player_from_doc(p, f"shots[{index}].faces") for p in shot_doc.get("faces", [])
        }
        jerseys[index] = [
            JerseyRecord(name=j.get("name"), number=j.get("number"),
                         color=j["color"], action=j["action"])
            for j in shot_doc.get("jerseys", [])
        ]
    views = [ViewLabel(s["view"]) for s in doc.get("shots", [])]
    colors = doc.get("resolved_colors")
    resolved = (colors["home"], colors["away"]) if colors else None
    return build_scene_report(shots, views, recognized=recognized,
                              jerseys=jerseys, resolved_colors=resolved)


def scene_report_to_doc(report: SceneReport) -> dict:
    doc: dict = {
        "shots": [
            {
                "start_frame": s.start_frame,
                "end_frame": s.end_frame,
                "view": s.view.value,
                "faces": [
                    {"name": p.name, "number": p.number, "position": p.position.value}
                    for p in sorted(report.recognized[i], key=lambda p: (p.name, p.number))
                ],
                "jerseys": [
                    {
                        "name": r.name,
                        "number": r.number,
                        "color": r.color,
                        "action": r.action,
                    }
                    for r in report.jerseys[i]
                ],
            }
            for i, s in enumerate(report.shots)
        ]
    }
    if report.resolved_colors is not None:
        doc["resolved_colors"] = {
            "home": report.resolved_colors[0],
            "away": report.resolved_colors[1],
        }
    return doc
