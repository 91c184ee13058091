from __future__ import annotations

from typing import Dict, Type

from app.application.ports.report_exporter import ReportExporter
from app.domain.exceptions import InvalidRunConfigError
from app.infrastructure.export.csv_exporter import CsvReportExporter
from app.infrastructure.export.json_exporter import JsonReportExporter
from app.infrastructure.export.text_exporter import TextReportExporter

_EXPORTERS: Dict[str, Type] = {
    "json": JsonReportExporter,
    "csv": CsvReportExporter,
    "text": TextReportExporter,
}

FORMATS = tuple(_EXPORTERS)


def get_exporter(format_name: str) -> ReportExporter:
    try:
        return _EXPORTERS[format_name]()
    except KeyError:
        raise InvalidRunConfigError(f"unknown output format {format_name!r}; use one of {', '.join(FORMATS)}") from None
