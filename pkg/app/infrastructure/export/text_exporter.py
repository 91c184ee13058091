from __future__ import annotations

from typing import List, Sequence

from app.application.ports.report_exporter import Document, Table
from app.infrastructure.export.canonical import canonical


def _aligned(table: Table) -> List[str]:
    grid: List[Sequence[str]] = [table.columns, *table.rows]
    widths = [max(len(row[i]) for row in grid) for i in range(len(table.columns))]
    return [
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
        for row in grid
    ]


class TextReportExporter:
    format_name = "text"

    def render(self, document: Document) -> str:
        lines = [f"{document.command}"]
        for key in sorted(document.fields):
            lines.append(f"  {key}: {canonical(document.fields[key])}")
        for table in document.tables:
            lines.append("")
            lines.append(table.title)
            lines.extend(_aligned(table) if table.columns else [])
        return "\n".join(lines) + "\n"
