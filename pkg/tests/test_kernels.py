import numpy as np
import pytest

from canalizer import kernels
from canalizer.core import BooleanFunction


def sample(n, count, seed):
    rng = np.random.default_rng(seed)
    if n <= 5:
        return rng.integers(0, 1 << (1 << n), size=count, dtype=np.uint64)
    hi = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
    lo = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
    return (hi << np.uint64(32)) | lo


def test_pack_unpack_round_trip():
    rng = np.random.default_rng(3)
    for n in (2, 4, 6):
        tables = rng.integers(0, 2, size=(40, 1 << n)).astype(np.uint8)
        packed = kernels.pack_tables(tables)
        assert np.array_equal(kernels.unpack_tables(packed, n), tables)
        f = BooleanFunction(tables[0])
        assert f.packed == int(packed[0])


def test_slice_masks_partition():
    for n in (1, 3, 6):
        masks = kernels.slice_masks(n)
        size = 1 << n
        full = (1 << size) - 1
        for i in range(n):
            assert int(masks[i, 0]) | int(masks[i, 1]) == full
            assert int(masks[i, 0]) & int(masks[i, 1]) == 0
            assert bin(int(masks[i, 0])).count("1") == size // 2


def test_cell_indices_cover_all_truth_indices():
    for n in (2, 3, 5, 6):
        cells = kernels.kmap_cell_indices(n)
        assert cells.shape == (1 << ((n + 1) // 2), 1 << (n // 2))
        assert sorted(cells.ravel().tolist()) == list(range(1 << n))


def test_witness_mask_decode():
    mask = (1 << kernels.witness_bit(3, 1, 0)) | (1 << kernels.witness_bit(1, 0, 1))
    assert kernels.decode_witness_mask(mask, 5) == [(1, 0, 1), (3, 1, 0)]


@pytest.mark.skipif(not kernels.NUMBA_AVAILABLE, reason="numba backend not importable")
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_backends_agree(n, warm_kernels):
    funcs = kernels.all_packed(n) if n <= 3 else sample(n, 50_000, seed=n)
    assert np.array_equal(
        kernels.oracle_masks_numba(funcs, n), kernels.oracle_masks_numpy(funcs, n)
    )
    assert np.array_equal(
        kernels.kmap_masks_numba(funcs, n), kernels.kmap_masks_numpy(funcs, n)
    )


@pytest.mark.parametrize("workers", [1, 2, 3])
def test_chunked_dispatch_is_deterministic(workers, warm_kernels):
    funcs = sample(5, 30_000, seed=99)
    assert np.array_equal(
        kernels.oracle_masks(funcs, 5, workers=workers),
        kernels.oracle_masks(funcs, 5, workers=1),
    )
    assert np.array_equal(
        kernels.kmap_masks(funcs, 5, workers=workers),
        kernels.kmap_masks(funcs, 5, workers=1),
    )


def test_numpy_batching_boundaries():
    funcs = sample(6, 3000, seed=5)
    assert np.array_equal(
        kernels.kmap_masks_numpy(funcs, 6, batch=256),
        kernels.kmap_masks_numpy(funcs, 6),
    )


def test_all_packed_cap():
    assert kernels.all_packed(2).size == 16
    with pytest.raises(ValueError):
        kernels.all_packed(5)
