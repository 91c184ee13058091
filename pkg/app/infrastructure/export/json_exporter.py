from __future__ import annotations

import json

from app.application.ports.report_exporter import Document
from app.infrastructure.export.canonical import canonical


class JsonReportExporter:
    """Sorted keys and canonical rationals, so one configuration always yields the same bytes."""

    format_name = "json"

    def render(self, document: Document) -> str:
        payload = {
            "command": document.command,
            "fields": canonical(document.fields),
            "tables": [
                {
                    "title": t.title,
                    "columns": list(t.columns),
                    "rows": [list(r) for r in t.rows],
                }
                for t in document.tables
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
