import pytest

from stratmod.peter_weyl import span_basis
from stratmod.poly import TriplePars

SEED = 1234


class BasisCache:
    def __init__(self):
        self.cache = {}

    def __call__(self, lam, r=2, s=2):
        key = (tuple(lam), r, s)
        if key not in self.cache:
            self.cache[key] = span_basis(lam, TriplePars(r, s), SEED)
        return self.cache[key]


@pytest.fixture(scope="session")
def bases():
    return BasisCache()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see whether the test body failed
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
