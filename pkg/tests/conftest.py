import numpy as np
import pytest

from cqbounds.channel import CQChannel
from cqbounds.codes import BlockCode

ACCEPTANCE_LINES: list[str] = []


def random_density(rng, dim, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_binary_channel(rng, dims=(2, 3)):
    dim = int(rng.choice(dims))
    return CQChannel(tuple(random_density(rng, dim, int(rng.integers(1, dim + 1))) for _ in range(2)))


def random_code(rng, n, M):
    idx = rng.choice(2**n, size=M, replace=False)
    return BlockCode(tuple(format(int(i), f"0{n}b") for i in idx))


def random_psd(rng, dim, rank=None):
    return random_density(rng, dim, rank) * float(rng.uniform(0.5, 3.0))


@pytest.fixture
def rng():
    return np.random.default_rng(20001)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
