"""Hot scan kernels over packed truth tables.

A function on n <= 6 variables packs into one uint64: bit t of the word is
f(t). Both detectors are implemented as bulk scans that map an array of
packed tables to an array of witness masks. Witness (i, a, b), meaning
"fixing x_i = a forces output b", is encoded as mask bit 4*(i-1) + 2*a + b.

Two interchangeable backends exist for each scan:

* a numba @njit kernel (default when numba imports), and
* a vectorized pure-numpy twin.

Set CANALIZER_BACKEND=numpy to force the numpy path, or =numba to require
the JIT (raises if numba is unavailable). The default "auto" prefers numba.
Both backends are exercised against each other in the test suite and can
be timed with benchmarks/bench_detectors.py.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np

_ENV_FLAG = "CANALIZER_BACKEND"


def _select_backend():
    choice = os.environ.get(_ENV_FLAG, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV_FLAG} must be auto, numba, or numpy; got {choice!r}")
    if choice == "numpy":
        return "numpy", False
    try:
        import numba  # noqa: F401
        return "numba", True
    except ImportError:
        if choice == "numba":
            raise
        return "numpy", False


BACKEND, NUMBA_AVAILABLE = _select_backend()


# ---------------------------------------------------------------------------
# layout helpers

@lru_cache(maxsize=None)
def slice_masks(n):
    """(n, 2) uint64 array: masks[i-1][a] has bit t set iff x_i(t) == a."""
    masks = np.zeros((n, 2), dtype=np.uint64)
    for i in range(n):
        m0 = 0
        m1 = 0
        for t in range(1 << n):
            if (t >> i) & 1:
                m1 |= 1 << t
            else:
                m0 |= 1 << t
        masks[i, 0] = m0
        masks[i, 1] = m1
    masks.flags.writeable = False
    return masks


@lru_cache(maxsize=None)
def kmap_cell_indices(n):
    """Truth index held by each cell of the Gray-ordered map.

    Shape (2^ceil(n/2), 2^floor(n/2)). Row r carries the reflected-Gray
    label r ^ (r >> 1) over the high variables (x_n outermost), column c
    the Gray label over the low variables, so the cell's truth index is
    (row_gray << floor(n/2)) | col_gray.
    """
    if n < 2:
        raise ValueError("a Karnaugh map needs at least 2 variables")
    h = n // 2
    rows = np.arange(1 << (n - h))
    cols = np.arange(1 << h)
    rg = rows ^ (rows >> 1)
    cg = cols ^ (cols >> 1)
    cells = ((rg[:, None] << h) | cg[None, :]).astype(np.uint64)
    cells.flags.writeable = False
    return cells


def pack_tables(tables):
    """Pack a (B, 2^n) array of 0/1 rows into uint64 words (bit t = row[t])."""
    tables = np.asarray(tables, dtype=np.uint8)
    raw = np.packbits(tables, axis=1, bitorder="little")
    if raw.shape[1] < 8:
        raw = np.pad(raw, ((0, 0), (0, 8 - raw.shape[1])))
    return raw.view("<u8").ravel()


def unpack_tables(packed, n):
    """Inverse of pack_tables: (B, 2^n) uint8 truth tables."""
    packed = np.ascontiguousarray(packed, dtype="<u8")
    raw = packed.view(np.uint8).reshape(-1, 8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, : 1 << n]


def witness_bit(i, a, b):
    return 4 * (i - 1) + 2 * a + b


def decode_witness_mask(mask, n):
    """Expand a witness mask into (variable, input, output) triples."""
    out = []
    mask = int(mask)
    for i in range(1, n + 1):
        for a in (0, 1):
            for b in (0, 1):
                if (mask >> witness_bit(i, a, b)) & 1:
                    out.append((i, a, b))
    return out


# ---------------------------------------------------------------------------
# restriction-oracle scan: constancy of every half-slice f|x_i=a

def oracle_masks_numpy(funcs, n):
    """Witness masks by direct slice-constancy tests, vectorized over funcs."""
    funcs = np.ascontiguousarray(funcs, dtype=np.uint64)
    masks = slice_masks(n)
    out = np.zeros(funcs.shape[0], dtype=np.uint32)
    for i in range(n):
        for a in range(2):
            m = masks[i, a]
            sub = funcs & m
            out |= (sub == 0).astype(np.uint32) << np.uint32(4 * i + 2 * a)
            out |= (sub == m).astype(np.uint32) << np.uint32(4 * i + 2 * a + 1)
    return out


# ---------------------------------------------------------------------------
# K-map scan: reflective-halves recursion on the Gray-ordered grid
#
# Along one axis, a block splits into its first half (outermost remaining
# variable = 0) and its second half in reversed order (variable = 1); the
# reflected Gray layout makes the two halves line up cell for cell. The
# outermost variable witnesses whenever a half is one constant across the
# whole block; a deeper variable witnesses the block iff it witnesses both
# halves. Witnesses of the full grid are the union over both axes.

def _split_masks_numpy(blocks, var):
    """Recursive witness masks along axis 1 of a (B, L, S) batch of blocks."""
    nfun, nlines, _ = blocks.shape
    out = np.zeros(nfun, dtype=np.uint32)
    if nlines < 2:
        return out
    half = nlines // 2
    top = blocks[:, :half, :]
    bottom = blocks[:, half:, :][:, ::-1, :]
    tflat = top.reshape(nfun, -1)
    bflat = bottom.reshape(nfun, -1)
    base = 4 * (var - 1)
    out |= np.all(tflat == 0, axis=1).astype(np.uint32) << np.uint32(base)
    out |= np.all(tflat == 1, axis=1).astype(np.uint32) << np.uint32(base + 1)
    out |= np.all(bflat == 0, axis=1).astype(np.uint32) << np.uint32(base + 2)
    out |= np.all(bflat == 1, axis=1).astype(np.uint32) << np.uint32(base + 3)
    if half >= 2:
        out |= _split_masks_numpy(top, var - 1) & _split_masks_numpy(bottom, var - 1)
    return out


def kmap_masks_numpy(funcs, n, batch=1 << 16):
    """Witness masks from the Gray-map recursion, vectorized in batches."""
    funcs = np.ascontiguousarray(funcs, dtype=np.uint64)
    cells = kmap_cell_indices(n)
    out = np.empty(funcs.shape[0], dtype=np.uint32)
    for lo in range(0, funcs.shape[0], batch):
        chunk = funcs[lo : lo + batch]
        grids = ((chunk[:, None, None] >> cells[None, :, :]) & np.uint64(1)).astype(np.uint8)
        m = _split_masks_numpy(grids, n)
        m |= _split_masks_numpy(grids.transpose(0, 2, 1), n // 2)
        out[lo : lo + chunk.shape[0]] = m
    return out


# ---------------------------------------------------------------------------
# numba twins

oracle_masks_numba = None
kmap_masks_numba = None

if NUMBA_AVAILABLE:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _oracle_kernel(funcs, masks):
        n = masks.shape[0]
        out = np.zeros(funcs.shape[0], dtype=np.uint32)
        for p in range(funcs.shape[0]):
            f = funcs[p]
            w = 0
            for i in range(n):
                for a in range(2):
                    m = masks[i, a]
                    sub = f & m
                    if sub == np.uint64(0):
                        w |= 1 << (4 * i + 2 * a)
                    elif sub == m:
                        w |= 1 << (4 * i + 2 * a + 1)
            out[p] = np.uint32(w)
        return out

    @njit(cache=True, nogil=True)
    def _lines_constant(grid, off, step, count, along_rows):
        # Returns the constant value of `count` full lines, or -1.
        if along_rows:
            v = grid[off, 0]
            for j in range(count):
                r = off + j * step
                for c in range(grid.shape[1]):
                    if grid[r, c] != v:
                        return -1
        else:
            v = grid[0, off]
            for j in range(count):
                c = off + j * step
                for r in range(grid.shape[0]):
                    if grid[r, c] != v:
                        return -1
        return int(v)

    @njit(cache=True, nogil=True)
    def _axis_mask(grid, nlines, outer_var, along_rows):
        # Blocks are affine views (offset, step) over line indices; splitting
        # keeps the first half and reverses the second, mirroring the
        # reflected-Gray alignment.
        offs = np.empty(nlines, dtype=np.int64)
        steps = np.empty(nlines, dtype=np.int64)
        offs[0] = 0
        steps[0] = 1
        nblocks = 1
        count = nlines
        depth = 0
        w = 0
        while count >= 2:
            half = count >> 1
            ok00 = True
            ok01 = True
            ok10 = True
            ok11 = True
            for b in range(nblocks):
                off = offs[b]
                st = steps[b]
                t = _lines_constant(grid, off, st, half, along_rows)
                ok00 = ok00 and t == 0
                ok01 = ok01 and t == 1
                u = _lines_constant(grid, off + (count - 1) * st, -st, half, along_rows)
                ok10 = ok10 and u == 0
                ok11 = ok11 and u == 1
            base = 4 * (outer_var - depth - 1)
            if ok00:
                w |= 1 << base
            if ok01:
                w |= 1 << (base + 1)
            if ok10:
                w |= 1 << (base + 2)
            if ok11:
                w |= 1 << (base + 3)
            for b in range(nblocks - 1, -1, -1):
                off = offs[b]
                st = steps[b]
                offs[2 * b] = off
                steps[2 * b] = st
                offs[2 * b + 1] = off + (count - 1) * st
                steps[2 * b + 1] = -st
            nblocks *= 2
            count = half
            depth += 1
        return w

    @njit(cache=True, nogil=True)
    def _kmap_kernel(funcs, cells, n):
        nrow, ncol = cells.shape
        out = np.zeros(funcs.shape[0], dtype=np.uint32)
        grid = np.empty((nrow, ncol), dtype=np.uint8)
        for p in range(funcs.shape[0]):
            f = funcs[p]
            for r in range(nrow):
                for c in range(ncol):
                    grid[r, c] = np.uint8((f >> cells[r, c]) & np.uint64(1))
            w = _axis_mask(grid, nrow, n, True)
            w |= _axis_mask(grid, ncol, n // 2, False)
            out[p] = np.uint32(w)
        return out

    def oracle_masks_numba(funcs, n):
        funcs = np.ascontiguousarray(funcs, dtype=np.uint64)
        return _oracle_kernel(funcs, slice_masks(n))

    def kmap_masks_numba(funcs, n):
        funcs = np.ascontiguousarray(funcs, dtype=np.uint64)
        return _kmap_kernel(funcs, kmap_cell_indices(n), n)


# ---------------------------------------------------------------------------
# dispatch

_ORACLE = oracle_masks_numba if BACKEND == "numba" else oracle_masks_numpy
_KMAP = kmap_masks_numba if BACKEND == "numba" else kmap_masks_numpy


def _chunked(fn, funcs, n, workers):
    if workers <= 1 or funcs.shape[0] < 4096:
        return fn(funcs, n)
    parts = np.array_split(funcs, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda chunk: fn(chunk, n), parts))
    return np.concatenate(results)


def oracle_masks(funcs, n, workers=1):
    """Witness masks of the restriction oracle for an array of packed tables."""
    return _chunked(_ORACLE, np.ascontiguousarray(funcs, dtype=np.uint64), n, workers)


def kmap_masks(funcs, n, workers=1):
    """Witness masks of the Gray-map recursion for an array of packed tables."""
    return _chunked(_KMAP, np.ascontiguousarray(funcs, dtype=np.uint64), n, workers)


def all_packed(n):
    """Every packed truth table on n variables (n <= 4)."""
    if n > 4:
        raise ValueError("exhaustive enumeration is capped at 4 variables")
    return np.arange(1 << (1 << n), dtype=np.uint64)
