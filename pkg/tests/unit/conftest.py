"""
Pytest configuration for unit tests.

The fixture modules of tests/unit/fixtures are registered via pytest_plugins
in the rootdir conftest.py (pytest forbids pytest_plugins in nested conftests).
"""
