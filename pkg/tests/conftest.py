import random

import pytest
from hypothesis import HealthCheck, settings

from weighthom.complex import random_complex
from weighthom.fixtures import figure1, figure2, projective_plane, sphere, torus

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SUITE_SEED = 7
SUITE_CASES = 200


def suite_seeds(seed=SUITE_SEED, cases=SUITE_CASES):
    rng = random.Random(seed)
    return [rng.randrange(2 ** 31) for _ in range(cases)]


def suite_complexes(seed=SUITE_SEED, cases=SUITE_CASES, field=None):
    out = []
    for s in suite_seeds(seed, cases):
        X = random_complex(s, max_dim=3, budget=15, max_weight=10)
        out.append(X.with_field(field) if field is not None else X)
    return out


@pytest.fixture(scope="session")
def fig1():
    return figure1()


@pytest.fixture(scope="session")
def fig2():
    return figure2()


@pytest.fixture(scope="session")
def rp2():
    return projective_plane()


@pytest.fixture(scope="session")
def sph():
    return sphere()


@pytest.fixture(scope="session")
def tor():
    return torus()


@pytest.fixture(scope="session")
def suite():
    return suite_complexes()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
