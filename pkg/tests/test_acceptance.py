"""Every acceptance criterion, one test each, with a pass/fail line printed per criterion.

The lines also appear in the terminal summary of every pytest run.
"""

import json
from pathlib import Path

import pytest

from gradiv import acceptance
from helpers import ACCEPTANCE_LINES

FIXTURE = Path(__file__).parent / "fixtures" / "trace_signatures.json"


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.line()


def test_signature_table_matches_oracle_fixture():
    oracle = json.loads(FIXTURE.read_text(encoding="utf-8"))
    assert {n: v["signature"] for n, v in oracle.items()} == acceptance.EXPECTED_SIGNATURES
    for name, R in acceptance.signature_algebras().items():
        assert R.dim == oracle[name]["dim"]
        assert oracle[name]["rank"] == R.dim
