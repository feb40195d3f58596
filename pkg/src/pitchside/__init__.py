"""pitchside: deterministic engine for knowledge-enhanced soccer commentary.

Subsystems:

- :mod:`pitchside.events`    event-sourced match-state replay
- :mod:`pitchside.grounding` frame relevance from exported cross-attention
- :mod:`pitchside.scene`     shot segmentation, faces, jerseys, team colors
- :mod:`pitchside.statbase`  statistics store + query DSL with as-of guard
- :mod:`pitchside.pipeline`  two-stage commentary orchestration over clients
- :mod:`pitchside.evalkit`   alignment metrics, claim verification, tallies
"""

__version__ = "0.1.0"
