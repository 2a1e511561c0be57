"""Karnaugh-map construction and the two canalization detectors.

A function is canalizing when some variable x_i and input value a force
the output to a constant b regardless of the other variables. The
restriction oracle tests exactly that definition on every (i, a) slice.
The K-map detector reaches the same verdict through the reflective
recursion on the Gray-ordered grid; the two are compared exhaustively in
the verification suite.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .core import BooleanFunction


class CanalizingWitness(NamedTuple):
    """Certificate that restricting `variable` to `input` forces `output`."""

    variable: int
    input: int
    output: int


@dataclass(frozen=True)
class KMap:
    """Gray-ordered grid of truth-table outputs.

    grid[r][c] holds f(t) where the row variables (x_n outermost down to
    x_{floor(n/2)+1}) take the reflected-Gray label of r and the column
    variables (x_{floor(n/2)} down to x_1) the label of c.
    """

    n: int
    grid: np.ndarray
    row_vars: tuple
    col_vars: tuple

    @property
    def rows(self):
        return self.grid.shape[0]

    @property
    def cols(self):
        return self.grid.shape[1]

    def row_labels(self):
        r = np.arange(self.rows)
        return [int(v) for v in r ^ (r >> 1)]

    def col_labels(self):
        c = np.arange(self.cols)
        return [int(v) for v in c ^ (c >> 1)]

    def truth_index(self, r, c):
        return int(kernels.kmap_cell_indices(self.n)[r, c])


def build_kmap(f):
    """Lay the truth table of f out on the Gray-ordered grid (n >= 2)."""
    if f.n < 2:
        raise ValueError("a Karnaugh map needs at least 2 variables")
    cells = kernels.kmap_cell_indices(f.n)
    grid = f.table[cells.astype(np.int64)]
    grid = grid.copy()
    grid.flags.writeable = False
    h = f.n // 2
    return KMap(
        n=f.n,
        grid=grid,
        row_vars=tuple(range(f.n, h, -1)),
        col_vars=tuple(range(h, 0, -1)),
    )


def _decode(mask, n):
    return {CanalizingWitness(i, a, b) for i, a, b in kernels.decode_witness_mask(mask, n)}


def oracle_witnesses(f):
    """All witnesses by direct restriction scan; the ground-truth definition."""
    if f.n < 1:
        raise ValueError("witness scan needs at least 1 variable")
    mask = kernels.oracle_masks(np.array([f.packed], dtype=np.uint64), f.n)[0]
    return _decode(mask, f.n)


def kmap_witnesses(f):
    """All witnesses found by the reflective recursion on the K-map (n >= 2)."""
    if f.n < 2:
        raise ValueError("the K-map detector needs at least 2 variables")
    mask = kernels.kmap_masks(np.array([f.packed], dtype=np.uint64), f.n)[0]
    return _decode(mask, f.n)


def is_canalizing(f):
    """True iff some (variable, input) slice of f is constant."""
    if not isinstance(f, BooleanFunction):
        raise TypeError("is_canalizing expects a BooleanFunction")
    return len(oracle_witnesses(f)) > 0


def detector_divergences(n, packed=None, workers=1):
    """Compare the two detectors over an array of packed tables.

    Parameters:
        n (int): variable count (>= 2).
        packed (array, optional): packed tables to scan; defaults to the
            full space for n <= 4.
        workers (int): chunk the scan across this many threads; the merge
            is ordered, so results do not depend on the worker count.

    Returns:
        (count, examples): number of diverging tables and up to 10 packed
        counterexamples.
    """
    if packed is None:
        packed = kernels.all_packed(n)
    packed = np.ascontiguousarray(packed, dtype=np.uint64)
    om = kernels.oracle_masks(packed, n, workers=workers)
    km = kernels.kmap_masks(packed, n, workers=workers)
    bad = om != km
    count = int(np.count_nonzero(bad))
    examples = packed[bad][:10]
    return count, examples
