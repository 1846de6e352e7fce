from itertools import combinations

import pytest

from hypertrees import kernels
from hypertrees.core import new_hypergraph


def all_edge_sets(n, k):
    """Every k-uniform hypergraph on n labelled vertices, including the empty one."""
    uni = list(combinations(range(n), k))
    for sid in range(1 << len(uni)):
        yield sid, new_hypergraph(k, n, [uni[j] for j in range(len(uni)) if sid >> j & 1])


@pytest.fixture(scope="session")
def sweep_53():
    return list(all_edge_sets(5, 3))


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    old = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(old)


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {status} - {detail}")
