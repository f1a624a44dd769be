"""Pytest configuration and fixtures."""
from __future__ import annotations

import random
from pathlib import Path

import pytest

from config import settings
from models.program import LabelledProgram
from services.program_parser import parse_program

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def load_corpus(name: str, allow_shared_labels: bool = False) -> LabelledProgram:
    text = (CORPUS_DIR / f"{name}.lp").read_text(encoding="utf-8")
    return parse_program(text, allow_shared_labels=allow_shared_labels)


@pytest.fixture(autouse=True)
def mock_env_vars(monkeypatch, tmp_path) -> None:
    """Set up test environment variables"""
    monkeypatch.setenv('ECJ_MAX_ADDENDS', '20000')
    monkeypatch.setenv('ECJ_MAX_ATOMS_ENUM', '16')
    monkeypatch.setenv('ECJ_ALLOW_SHARED_LABELS', 'false')
    monkeypatch.setenv('ECJ_OUTPUT_FORMAT', 'text')
    monkeypatch.setenv('LOG_DIR', str(tmp_path / 'logs'))
    monkeypatch.setenv('LOG_LEVEL', 'WARNING')
    settings.reload()


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized suites are repeatable"""
    return random.Random(20140213)


@pytest.fixture
def bond_program() -> LabelledProgram:
    return load_corpus("bond")


@pytest.fixture
def cycle_program() -> LabelledProgram:
    return load_corpus("cycle")


@pytest.fixture
def counterexample_program() -> LabelledProgram:
    return load_corpus("counterexample")


@pytest.fixture(scope="session")
def shooting_program() -> LabelledProgram:
    return load_corpus("shooting")


@pytest.fixture(scope="session")
def shooting_dry_program() -> LabelledProgram:
    return load_corpus("shooting_dry")


@pytest.fixture
def throwers_program() -> LabelledProgram:
    return load_corpus("throwers", allow_shared_labels=True)
