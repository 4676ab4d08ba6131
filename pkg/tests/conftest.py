from __future__ import annotations

from pathlib import Path

import pytest

from mbti_szondi import builtin_interpretation, load_interpretation

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def interp():
    return builtin_interpretation()


@pytest.fixture(scope="session")
def alt_interp():
    return load_interpretation((DATA / "alt_interpretation.txt").read_text())


def data_text(name: str) -> str:
    return (DATA / name).read_text()


def data_path(name: str) -> Path:
    return DATA / name
