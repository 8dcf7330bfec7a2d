"""Shared fixtures for the numeration test suite"""

import pytest

from chung_graham.core.config import DESK_LIMIT_ENV
from chung_graham.core.rule import params


@pytest.fixture
def p2():
    return params(2)


@pytest.fixture
def p4():
    return params(4)


@pytest.fixture(autouse=True)
def default_desk_limit(monkeypatch):
    # A CGX_DESK_LIMIT exported in the developer's shell must not leak into tests
    monkeypatch.delenv(DESK_LIMIT_ENV, raising=False)
