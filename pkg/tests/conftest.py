import pytest

from csftrees._kernels import warmup


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # JIT-compile the numba kernels once so timed tests measure steady state.
    warmup()
