"""Nested canalizing functions: decomposition, census, and generation.

A function on n variables is nested canalizing (NCF) when canalizing
layers peel all the way down: some variable order sigma and values
(a_k, b_k) represent it as

    f = b_1 if x_sigma(1) = a_1,
        b_2 if x_sigma(2) = a_2 and x_sigma(1) != a_1,
        ...,
        b_n if x_sigma(n) = a_n and all earlier variables missed,
        not b_n otherwise.

The canonical decomposition peels the smallest-index canalizing variable
at each step and prefers input value 0 when both inputs of that variable
canalize (only possible once the residual collapses to one variable).
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import BooleanFunction
from .kmap import oracle_witnesses


class CanalizingLayer(NamedTuple):
    """One peeled layer: fixing `variable` to `input` forces `output`."""

    variable: int
    input: int
    output: int


@dataclass(frozen=True)
class NcfDecomposition:
    """Canonical layer list of an NCF; the unmatched cell holds final_complement."""

    layers: tuple
    final_complement: int

    @property
    def n(self):
        return len(self.layers)

    def to_function(self):
        return function_from_layers(self.n, self.layers, self.final_complement)


def evaluate_layers(t, layers):
    """Output of the first layer matching truth index t, or None."""
    for variable, inp, out in layers:
        if (t >> (variable - 1)) & 1 == inp:
            return out
    return None


def function_from_layers(n, layers, final_complement):
    """Rebuild the truth table from peeled layers plus the final cell value."""
    table = np.empty(1 << n, dtype=np.uint8)
    for t in range(1 << n):
        v = evaluate_layers(t, layers)
        table[t] = final_complement if v is None else v
    return BooleanFunction(table)


def peel_canonical(fn, ids):
    """One canonical peel of a non-constant residual.

    Parameters:
        fn (BooleanFunction): the residual, n >= 1 and not constant.
        ids (tuple): original variable index of each residual variable.

    Returns:
        (layer, residual, residual_ids) or None when nothing canalizes.
    """
    witnesses = oracle_witnesses(fn)
    if not witnesses:
        return None
    local, a, b = min(witnesses, key=lambda w: (w.variable, w.input))
    layer = CanalizingLayer(ids[local - 1], a, b)
    residual = fn.restrict(local, 1 - a)
    return layer, residual, ids[: local - 1] + ids[local:]


def ncf_decompose(f) -> Optional[NcfDecomposition]:
    """Canonical decomposition of f, or None when f is not an NCF.

    Peeling must consume every variable and end on a non-constant
    one-variable residual, which forces essential dependence on all n
    variables.
    """
    if f.n < 1:
        raise ValueError("decomposition needs at least 1 variable")
    fn, ids = f, tuple(range(1, f.n + 1))
    layers = []
    while fn.n > 0:
        if fn.is_constant():
            return None
        step = peel_canonical(fn, ids)
        if step is None:
            return None
        layer, fn, ids = step
        layers.append(layer)
    return NcfDecomposition(layers=tuple(layers), final_complement=fn.evaluate(0))


# ---------------------------------------------------------------------------
# census matrix recursion

@dataclass(frozen=True)
class NcfCensusMatrix:
    """Counts of NCFs by starting variable (row) and distance index (column).

    cells[i-1][j-1] relates to NCFs whose canonical first layer uses x_i
    and whose distance to the nearer constant table is 2j-1; the full NCF
    count is 4 times the cell sum.
    """

    n: int
    cells: tuple

    @property
    def n_c(self):
        return 4 * sum(sum(row) for row in self.cells)

    def as_array(self):
        return np.array(self.cells, dtype=np.int64)


def ncf_matrix(n):
    """Census matrix by recursion from the two-variable base column (2, 0).

    For m >= 3 with cols = 2^(m-2) and half = 2^(m-3):
        cell[m][j] = 0                       for j <= half,
        cell[i][j] = cell[1][cols + 1 - j]   for j > half (every row),
        cell[i][j] = 2 * sum of rows i..m-1 of the (m-1)-matrix column j
                                             for i < m, j <= half.
    """
    if n < 2:
        raise ValueError("the census matrix starts at 2 variables")
    cells = [[2], [0]]
    for m in range(3, n + 1):
        prev = cells
        cols = 1 << (m - 2)
        half = 1 << (m - 3)
        cur = [[0] * cols for _ in range(m)]
        for j in range(1, half + 1):
            for i in range(1, m):
                cur[i - 1][j - 1] = 2 * sum(prev[k - 1][j - 1] for k in range(i, m))
        for j in range(half + 1, cols + 1):
            mirrored = cur[0][cols - j]
            for i in range(m):
                cur[i][j - 1] = mirrored
        cells = cur
    return NcfCensusMatrix(n=n, cells=tuple(tuple(row) for row in cells))


def ncf_census(n):
    """Exhaustive tally over all functions: decompose, bucket by
    (first-layer variable, distance index). Returns an (n, 2^(n-2)) array."""
    if n < 2:
        raise ValueError("census needs at least 2 variables")
    if n > 4:
        raise ValueError("exhaustive census is capped at 4 variables")
    from .generation import canalizing_packed

    counts = np.zeros((n, 1 << (n - 2)), dtype=np.int64)
    for packed in canalizing_packed(n):
        f = BooleanFunction.from_packed(int(packed), n)
        decomp = ncf_decompose(f)
        if decomp is None:
            continue
        d = f.ncf_distance()
        counts[decomp.layers[0].variable - 1, (d + 1) // 2 - 1] += 1
    return counts


def generate_ncfs(n):
    """All NCFs on n variables by repeated canalizing-variable insertion.

    Starts from {x_1, not x_1} on one variable and merges a new canalizing
    variable into every position with all four (input, output) choices,
    deduplicating level by level (n <= 5).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 5:
        raise ValueError("NCF generation is capped at 5 variables")
    level = {BooleanFunction([0, 1]), BooleanFunction([1, 0])}
    for m in range(1, n):
        nxt = set()
        for f in level:
            for k in range(1, m + 2):
                for a in (0, 1):
                    for b in (0, 1):
                        nxt.add(f.insert_canalizing_variable(k, a, b))
        level = nxt
    return sorted(level, key=lambda f: f.packed)
