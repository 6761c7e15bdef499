import functools
import os

import pytest

from sqfchar.chartab import character_table
from sqfchar.constructors import construct


@functools.lru_cache(maxsize=None)
def table_of(spec: str):
    """Character tables are expensive; share them across test modules."""
    return character_table(construct(spec))


@pytest.fixture
def table():
    return table_of


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SQFCHAR_SKIP_STRETCH") == "1":
        skip = pytest.mark.skip(reason="SQFCHAR_SKIP_STRETCH=1")
        for item in items:
            if "stretch" in item.keywords:
                item.add_marker(skip)
