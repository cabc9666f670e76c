"""
Root pytest configuration.

Registers the fixture modules of tests/unit/fixtures. pytest only accepts
pytest_plugins in the rootdir conftest, so the declaration lives here.
"""

pytest_plugins = [
    "tests.unit.fixtures",
    "tests.unit.fixtures.graph_fixtures",
    "tests.unit.fixtures.cli_fixture",
]
