"""Space-time diagrams of orbits, time going downward"""
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

from automata.configuration import Configuration
from automata.dynamics import OrbitRecord
from utilities.constants import DEFAULT_GLYPHS, STEP_MARKER

TraceLevel = Literal["steps", "substeps"]


@dataclass(frozen=True)
class DiagramRow:
    config: Configuration
    step: int
    # Index of the block just applied, None for rows that close a step
    substep: Optional[int] = None

    @property
    def is_step(self) -> bool:
        return self.substep is None


@dataclass(frozen=True)
class SpaceTimeDiagram:
    """Rows of an orbit from the input configuration to the first repeated step"""
    rows: tuple[DiagramRow, ...]

    def words(self) -> list[str]:
        return [str(row.config) for row in self.rows]


def build_diagram(record: OrbitRecord, level: TraceLevel = "steps") -> SpaceTimeDiagram:
    """Lay out an orbit as rows, closing with the configuration that repeats

    Substep rows need an orbit computed with trace=True.
    """
    closing = record.states[record.transient]
    steps = list(record.states) + [closing]
    rows = [DiagramRow(steps[0], 0)]
    for t in range(len(record.states)):
        if level == "substeps":
            if record.trace is None:
                raise ValueError("substep rows need an orbit traced at substep level")
            for index, config in enumerate(record.trace[t][:-1]):
                rows.append(DiagramRow(config, t, index))
        rows.append(DiagramRow(steps[t + 1], t + 1))
    return SpaceTimeDiagram(tuple(rows))


def render_text(diagram: SpaceTimeDiagram, glyphs: str = DEFAULT_GLYPHS) -> str:
    """One line per row; step rows carry the marker column"""
    lines = []
    for row in diagram.rows:
        cells = "".join(glyphs[state] for state in row.config.cells())
        marker = STEP_MARKER if row.is_step else " "
        lines.append(f"{marker} {cells}")
    return "\n".join(lines)


def write_pgm(diagram: SpaceTimeDiagram, path: Path) -> Path:
    """Plain (P2) greymap, one pixel per cell, state 1 drawn black"""
    width = diagram.rows[0].config.n
    lines = ["P2", f"{width} {len(diagram.rows)}", "1"]
    for row in diagram.rows:
        lines.append(" ".join(str(1 - state) for state in row.config.cells()))
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return path
