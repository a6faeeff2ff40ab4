import numpy as np
import pytest

from corpus import BLOCK_LISTS, quantum_corpus
from qgbounds import build_context


@pytest.fixture(params=BLOCK_LISTS, ids=lambda b: "blocks" + "-".join(map(str, b)))
def ctx(request):
    return build_context(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20241019)


_QC = quantum_corpus()


@pytest.fixture(params=_QC, ids=[name for name, _ in _QC])
def qgraph(request):
    return request.param[1]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
