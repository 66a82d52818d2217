"""
Shared fixtures
"""
import json

import pytest
from loguru import logger

from src.algebra import MonomialOrder, OrderKind, VariableSet, parse_polynomial


@pytest.fixture(autouse=True)
def quiet_logger():
    logger.remove()
    yield


@pytest.fixture
def xyz():
    return VariableSet(("x", "y", "z"))


@pytest.fixture
def xy():
    return VariableSet(("x", "y"))


@pytest.fixture
def poly(xyz):
    """Parse over x, y, z"""
    return lambda text, variables=xyz: parse_polynomial(text, variables)


@pytest.fixture
def grevlex(xyz):
    return MonomialOrder(OrderKind.GREVLEX, xyz)


@pytest.fixture
def json_file(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path
    return _write
