from __future__ import annotations

import pytest

SAMPLE_MATRIX = [
    "abababab",
    "bcabcabc",
    "aaaaaaaa",
    "cabcabca",
    "cbccbccb",
    "babababa",
    "ccaccacc",
    "cbcbcbcb",
]

SAMPLE_PERIODS = (2, 3, 1, 3, 3, 2, 3, 2)
SAMPLE_LWPOS = (0, 2, 0, 1, 1, 1, 2, 1)
SAMPLE_OFFSETS = (0, 0, 0, 2, 2, 1, 0, 1)
SAMPLE_Z = 2
SAMPLE_LCM = 6


@pytest.fixture
def sample_matrix() -> list[str]:
    return list(SAMPLE_MATRIX)
