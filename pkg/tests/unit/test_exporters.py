import json
from fractions import Fraction

import pytest

from app.application.ports.report_exporter import Document, Table
from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.scalars import P, Q
from app.infrastructure.export import FORMATS, get_exporter
from app.infrastructure.export.canonical import canonical


@pytest.fixture
def document():
    return Document(
        command="derive",
        fields={"problem": "mathieu-large", "order": 3, "coupling": Fraction(1, 2)},
        tables=(
            Table("lambda", ("power", "coefficient"), (("-2", "-1"), ("2", "-1/2*h^2"))),
            Table("sqrt_lambda", ("power", "coefficient"), (("-1", "I"),)),
        ),
    )


def test_canonical_values():
    assert canonical(Fraction(3, 4)) == "3/4"
    assert canonical(1 + 2j) == [1.0, 2.0]
    assert canonical(float("nan")) == "nan"
    assert canonical({1: (Fraction(1, 2), True)}) == {"1": ["1/2", True]}
    assert canonical(P("h") * Q(1, 2)) == str(P("h") * Q(1, 2))


def test_json_is_sorted_and_repeatable(document):
    exporter = get_exporter("json")
    first = exporter.render(document)
    assert first == exporter.render(document)
    payload = json.loads(first)
    assert list(payload) == ["command", "fields", "tables"]
    assert payload["fields"]["coupling"] == "1/2"
    assert payload["tables"][0]["rows"][1] == ["2", "-1/2*h^2"]


def test_csv_writes_one_block_per_table(document):
    text = get_exporter("csv").render(document)
    blocks = text.split("\n\n")
    assert len(blocks) == 2
    assert blocks[0].splitlines()[:2] == ["# lambda", "power,coefficient"]
    assert blocks[1].startswith("# sqrt_lambda\n")


def test_text_aligns_columns(document):
    lines = get_exporter("text").render(document).splitlines()
    assert lines[0] == "derive"
    assert "  coupling: 1/2" in lines
    header = lines.index("lambda") + 1
    assert lines[header] == "power  coefficient"
    assert len(lines[header + 1]) == len(lines[header + 2])


def test_every_format_is_registered():
    assert set(FORMATS) == {"json", "csv", "text"}


def test_unknown_format():
    with pytest.raises(InvalidRunConfigError):
        get_exporter("yaml")
