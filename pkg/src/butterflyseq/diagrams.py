"""Monospace Young-diagram rendering for partitions."""

from .partitions import Partition

CELL = "#"


def render_young(p: Partition, marks=None) -> str:
    """Render a left-aligned Young diagram, one row of cells per part.

    ``marks`` is an optional list of ``(row, col, label)`` triples (0-indexed)
    whose single-character labels replace the cell glyph.  Output carries no
    trailing newline; the empty partition renders as the empty string.
    """
    rows = [[CELL] * width for width in p.parts]
    for row, col, label in marks or ():
        if not (0 <= row < len(rows)) or not (0 <= col < len(rows[row])):
            raise ValueError("mark (%d, %d) outside the diagram" % (row, col))
        label = str(label)
        if len(label) != 1:
            raise ValueError("mark labels must be single characters: %r" % label)
        rows[row][col] = label
    return "\n".join("".join(r) for r in rows)
