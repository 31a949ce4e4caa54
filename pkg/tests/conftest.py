import os
import tempfile

# 在导入 abeltqft 之前隔离用户数据目录（配置与日志）
os.environ["ABELTQFT_HOME"] = tempfile.mkdtemp(prefix="abeltqft-test-")

import numpy as np
import pytest

from abeltqft.algebra.intmatrix import IntMatrix
from abeltqft.config import config
from abeltqft.topology.manifolds import lens_space, poincare_sphere, s1_x_s2, sphere3


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def fresh_config():
    config.reset()
    yield
    config.reset()


@pytest.fixture
def zoo():
    """Small manifolds with known first homology."""
    return [
        sphere3(),
        s1_x_s2(),
        poincare_sphere(),
        lens_space(2, 1),
        lens_space(3, 1),
        lens_space(4, 1),
        lens_space(5, 2),
        lens_space(6, 1),
        lens_space(7, 3),
        lens_space(8, 3),
    ]


def random_unimodular(rng, n: int, steps: int = 12) -> IntMatrix:
    """Product of random elementary matrices."""
    data = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        if n == 1 and rng.integers(0, 2):
            data[0][0] = -1
        return IntMatrix.from_rows(data, n)
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        factor = int(rng.integers(-2, 3))
        data[i] = [a + factor * b for a, b in zip(data[i], data[j])]
    return IntMatrix.from_rows(data, n)


def random_symmetric(rng, n: int, bound: int = 4) -> IntMatrix:
    upper = rng.integers(-bound, bound + 1, size=(n, n)).tolist()
    return IntMatrix.from_rows([[upper[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)], n)
