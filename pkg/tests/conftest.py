import numpy as np
import pytest

from genbasis import example_i, example_ii, generalized_basis
from genbasis.mobius import PreBasis

_CRITERIA = {}


def random_prebasis(rng, d, n):
    v = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    return PreBasis.from_vectors(v, strict=True)


def random_unitary(rng, d):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_suite(seed=2024, trials=50):
    """(d, n) pairs with d in {2,3,4}, n in {d+1..8}, cycled over `trials` pre-bases."""
    rng = np.random.default_rng(seed)
    shapes = [(d, n) for d in (2, 3, 4) for n in range(d + 1, 9)]
    return [random_prebasis(rng, *shapes[k % len(shapes)]) for k in range(trials)]


@pytest.fixture(scope="session")
def gb3():
    return generalized_basis(example_i())


@pytest.fixture(scope="session")
def gb4():
    return generalized_basis(example_ii())


@pytest.fixture(scope="session")
def suite():
    return random_suite()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion checked by this test")


def pytest_runtest_logreport(report):
    crit = getattr(report, "_criterion", None)
    if crit is None or not (report.when == "call" or report.failed):
        return
    num, title = crit
    ok, _, names = _CRITERIA.get(num, (True, title, []))
    _CRITERIA[num] = (ok and report.passed, title, names + [report.nodeid.split("::")[-1]])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep._criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, title, names = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({len(names)} checks)")
