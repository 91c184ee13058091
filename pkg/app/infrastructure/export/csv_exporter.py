from __future__ import annotations

import csv
import io

from app.application.ports.report_exporter import Document


class CsvReportExporter:
    """One CSV block per table, each preceded by a ``# title`` line; fields are not written."""

    format_name = "csv"

    def render(self, document: Document) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for index, table in enumerate(document.tables):
            if index:
                buffer.write("\n")
            buffer.write(f"# {table.title}\n")
            writer.writerow(table.columns)
            writer.writerows(table.rows)
        return buffer.getvalue()
