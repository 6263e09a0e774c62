from __future__ import annotations

import pytest

from quatforms import build_root_system, parse_type

# Every buildable type: classical families at desk scale plus exceptionals.
SUPPORTED_LABELS = (
    [f"A{n}" for n in range(1, 11)]
    + [f"B{n}" for n in range(2, 11)]
    + [f"C{n}" for n in range(2, 11)]
    + [f"D{n}" for n in range(3, 11)]
    + ["G2", "F4", "E6", "E7", "E8"]
)

# Types with a quaternionic node grading (everything of rank >= 2).
GRADED_LABELS = [s for s in SUPPORTED_LABELS if s != "A1"]

# Ranks at which the classifier is validated against the golden registry.
CLASSIFY_LABELS = (
    ["G2", "F4", "E6", "E7", "E8"]
    + [f"A{n}" for n in range(2, 9)]
    + [f"B{n}" for n in range(2, 10)]
    + [f"C{n}" for n in range(2, 8)]
    + [f"D{n}" for n in range(3, 10)]
)


@pytest.fixture(scope="session")
def rs_of():
    def _get(label: str):
        return build_root_system(parse_type(label))

    return _get
