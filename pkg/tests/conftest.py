import os

import pytest


@pytest.fixture(autouse=True)
def _run_from_tests_dir(monkeypatch):
    # The tests refer to data_for_tests/ relative to this directory.
    monkeypatch.chdir(os.path.dirname(os.path.abspath(__file__)))
