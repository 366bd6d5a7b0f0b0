from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from phrasecat import parse_catalogue, selection_from_json

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fig2_bytes() -> bytes:
    return (FIXTURES / "fig2.json").read_bytes()


@pytest.fixture(scope="session")
def fig2(fig2_bytes):
    return parse_catalogue(fig2_bytes)


@pytest.fixture(scope="session")
def row1_selection():
    return selection_from_json(json.loads((FIXTURES / "selection_row1.json").read_text()))


@pytest.fixture(scope="session")
def row3_selection():
    return selection_from_json(json.loads((FIXTURES / "selection_row3.json").read_text()))
