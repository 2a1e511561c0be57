import numpy as np
import pytest

from canalizer import kernels
from canalizer.core import BooleanFunction


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger JIT compilation so timed tests measure the scans only."""
    probe = np.arange(16, dtype=np.uint64)
    for n in (2, 3, 4, 5, 6):
        kernels.oracle_masks(probe, n)
        kernels.kmap_masks(probe, n)
    return True


@pytest.fixture(scope="session")
def all_functions():
    """BooleanFunction lists for every function on 1..3 variables."""
    return {
        n: [BooleanFunction.from_packed(int(p), n) for p in kernels.all_packed(n)]
        for n in (1, 2, 3)
    }
