import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from splitmat.core import validate  # noqa: E402
from splitmat.enumeration import catalog_members  # noqa: E402
from splitmat.named import catalog  # noqa: E402

# criterion -> (passed, detail); filled by test_acceptance, printed at the end
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")


@pytest.fixture(scope="session")
def named():
    return {k: catalog(k) for k in ("MW2", "S0", "S1", "S2", "S3", "S4")}


@pytest.fixture(scope="session")
def mw2():
    return catalog("MW2")


@pytest.fixture(scope="session")
def small_catalog():
    """Every matroid with 1 <= n <= 6, one per isomorphism class."""
    return [m for n in range(1, 7) for m in catalog_members(n)]


@pytest.fixture(scope="session")
def catalog7():
    return [m for n in range(1, 8) for m in catalog_members(n)]


def bases_of(*sets):
    return [tuple(int(c) for c in s) for s in sets]


@pytest.fixture
def make():
    def _make(n, r, *sets):
        return validate(n, r, bases_of(*sets))

    return _make
