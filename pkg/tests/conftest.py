import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def well_conditioned(rng: np.random.Generator, n: int, limit: float = 1e3) -> np.ndarray:
    while True:
        X = rng.standard_normal((2 * n, 2 * n))
        if np.linalg.cond(X) <= limit:
            return X
