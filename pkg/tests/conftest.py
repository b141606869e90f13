"""
Shared fixtures.
"""

import pytest

from aqecc_workbench.settings import using_settings


@pytest.fixture(scope="session", autouse=True)
def desk_budget():
    """Keep every enumeration at or below 2^20 codewords while testing."""
    with using_settings(max_codewords=2**20) as settings:
        yield settings
