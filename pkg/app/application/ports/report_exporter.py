from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Protocol, Tuple


@dataclass(frozen=True)
class Table:
    """A titled grid of already-formatted cells."""

    title: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[str, ...], ...]


@dataclass(frozen=True)
class Document:
    """What a command emits: scalar fields plus any number of tables."""

    command: str
    fields: Dict[str, Any] = field(default_factory=dict)
    tables: Tuple[Table, ...] = ()


class ReportExporter(Protocol):
    format_name: str

    def render(self, document: Document) -> str: ...
