"""Partially nested canalizing classification.

Canalizing layers are peeled with the same canonical rule as the NCF
decomposition, but peeling is allowed to stop early: a function of depth
d < n leaves a residual tail on n-d variables that is either constant or
non-canalizing. Peeling all the way down is the fully nested case.
"""

from dataclasses import dataclass

import numpy as np

from .core import BooleanFunction
from .kmap import is_canalizing
from .ncf import evaluate_layers, peel_canonical


@dataclass(frozen=True)
class ConstantTail:
    value: int

    kind = "constant"


@dataclass(frozen=True)
class NonCanalizingTail:
    residual: BooleanFunction

    kind = "non_canalizing"


@dataclass(frozen=True)
class FullyNested:
    final_complement: int

    kind = "fully_nested"


@dataclass(frozen=True)
class PncfClassification:
    """Peeled layers plus the tail that stopped the peeling.

    depth counts the peeled layers; constant functions classify with
    depth 0 but are tallied into the depth-1 bucket of the census
    (census_bucket) to match the published bookkeeping.
    """

    depth: int
    layers: tuple
    tail: object
    remaining_variables: tuple

    @property
    def census_bucket(self):
        if isinstance(self.tail, FullyNested):
            return "fully_nested"
        return str(max(self.depth, 1))

    def to_function(self, n):
        return reconstruct(n, self)


def pncf_classify(f):
    """Classify a canalizing function by maximal canonical peeling.

    Parameters:
        f (BooleanFunction): n >= 2; constant functions are accepted,
            anything else must be canalizing.

    Returns:
        PncfClassification. Raises ValueError for non-canalizing,
        non-constant input, which this taxonomy does not cover.
    """
    if f.n < 2:
        raise ValueError("classification needs at least 2 variables")
    if f.is_constant():
        return PncfClassification(
            depth=0, layers=(), tail=ConstantTail(f.evaluate(0)), remaining_variables=tuple(range(1, f.n + 1))
        )
    if not is_canalizing(f):
        raise ValueError("function is neither constant nor canalizing")
    fn, ids = f, tuple(range(1, f.n + 1))
    layers = []
    while True:
        if fn.is_constant():
            tail = ConstantTail(fn.evaluate(0))
            break
        if fn.n == 1:
            layer, fn, ids = peel_canonical(fn, ids)
            layers.append(layer)
            tail = FullyNested(fn.evaluate(0))
            ids = ()
            break
        step = peel_canonical(fn, ids)
        if step is None:
            tail = NonCanalizingTail(fn)
            break
        layer, fn, ids = step
        layers.append(layer)
    return PncfClassification(
        depth=len(layers), layers=tuple(layers), tail=tail, remaining_variables=ids
    )


def reconstruct(n, classification):
    """Rebuild the truth table from layers plus tail; inverse of pncf_classify."""
    tail = classification.tail
    remaining = classification.remaining_variables
    table = np.empty(1 << n, dtype=np.uint8)
    for t in range(1 << n):
        v = evaluate_layers(t, classification.layers)
        if v is None:
            if isinstance(tail, ConstantTail):
                v = tail.value
            elif isinstance(tail, FullyNested):
                v = tail.final_complement
            else:
                reduced = 0
                for pos, var in enumerate(remaining):
                    reduced |= ((t >> (var - 1)) & 1) << pos
                v = tail.residual.evaluate(reduced)
        table[t] = v
    return BooleanFunction(table)


def pncf_census(n):
    """Tally every canalizing function on n variables by depth and tail kind.

    Returns a dict with per-bucket counts: buckets "1", "2", ... hold
    dicts {"constant": c, "non_canalizing": m, "total": c+m} (constants
    land in bucket "1" per census_bucket), bucket "fully_nested" holds the
    NCF count, and "total" the size of the canalizing class.
    """
    if n > 4:
        raise ValueError("exhaustive census is capped at 4 variables")
    if n < 2:
        raise ValueError("census needs at least 2 variables")
    from .generation import canalizing_packed

    buckets = {}
    total = 0
    for packed in canalizing_packed(n):
        cls = pncf_classify(BooleanFunction.from_packed(int(packed), n))
        total += 1
        key = cls.census_bucket
        if key == "fully_nested":
            buckets["fully_nested"] = buckets.get("fully_nested", 0) + 1
        else:
            sub = buckets.setdefault(key, {"constant": 0, "non_canalizing": 0, "total": 0})
            sub[cls.tail.kind] += 1
            sub["total"] += 1
    buckets["total"] = total
    return buckets
