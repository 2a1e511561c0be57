"""Generation of the canalizing class at n+1 variables by concatenation.

Concatenation facts driving the generator (each verified exhaustively in
the tests at desk scale):

* the complement of a canalizing function is canalizing;
* ff is canalizing for canalizing f;
* ff' is canalizing only for constant f;
* for non-canalizing f, fg is canalizing iff g is constant;
* a constant half makes every concatenation canalizing;
* two non-canalizing halves never concatenate to a canalizing function.

So only ordered pairs of distinct non-constant canalizing halves, minus
the complement pairs, ever need the detector: at most
(X-2)^2 - (X-2) invocations when X is the size of the canalizing class.
"""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import kernels
from .core import BooleanFunction


def detector_budget(x):
    """Upper bound on detector invocations when generating from a class of size x."""
    return (x - 2) ** 2 - (x - 2)


def canalizing_packed(n):
    """Packed tables of every canalizing function on n variables (n <= 4)."""
    funcs = kernels.all_packed(n)
    return funcs[kernels.oracle_masks(funcs, n) != 0]


def enumerate_canalizing(n):
    """All canalizing functions on n variables, sorted by packed table (n <= 4)."""
    return [BooleanFunction.from_packed(int(v), n) for v in canalizing_packed(n)]


@dataclass
class GenerationReport:
    """Outcome of one n -> n+1 generation sweep."""

    n_source: int
    produced: list
    detector_invocations: int
    budget: int
    category_tallies: dict = field(default_factory=dict)

    @property
    def produced_packed(self):
        return np.array([f.packed for f in self.produced], dtype=np.uint64)


def generate_canalizing_next(source, workers=1):
    """Generate the full canalizing class on n+1 variables from the class on n.

    Parameters:
        source: the canalizing functions on n variables (n <= 4). A spot
            check rejects sources containing a non-canalizing function.
        workers (int): thread count for the detector sweep.

    Returns:
        GenerationReport with the produced class (deduplicated, sorted by
        packed table), the number of detector invocations, and per-category
        tallies. The invocation count never exceeds detector_budget(len(source)).
    """
    source = list(source)
    if not source:
        raise ValueError("source class is empty")
    n = source[0].n
    if any(f.n != n for f in source):
        raise ValueError("source functions must share one variable count")
    if n > 4:
        raise ValueError("generation sweeps are capped at source n <= 4")
    src = np.array(sorted(f.packed for f in source), dtype=np.uint64)
    if np.unique(src).size != src.size:
        raise ValueError("source contains duplicates")
    if np.any(kernels.oracle_masks(src, n) == 0):
        raise ValueError("source contains a non-canalizing function")

    size = 1 << n
    total = 1 << size
    full = np.uint64(total - 1)
    shift = np.uint64(size)
    x = src.size

    everything = kernels.all_packed(n)
    noncanal = total - x
    parts = []

    # Constant halves: with a constant on either side, every pairing is
    # canalizing, including every non-canalizing partner.
    for c in (np.uint64(0), full):
        parts.append(everything | (c << shift))
        parts.append(c | (everything << shift))

    # Diagonal ff for every canalizing f.
    parts.append(src | (src << shift))

    # Remaining candidates: ordered pairs of distinct non-constant
    # canalizing halves, skipping g = f' (never canalizing). Swept in
    # blocks of left halves to bound peak memory.
    core = src[(src != 0) & (src != full)]
    budget = detector_budget(int(x))
    invocations = 0
    hit_parts = []
    block = max(1, (1 << 22) // max(int(core.size), 1))
    for lo in range(0, core.size, block):
        chunk = core[lo : lo + block]
        lefts = np.repeat(chunk, core.size)
        rights = np.tile(core, chunk.size)
        keep = (lefts != rights) & (rights != (lefts ^ full))
        cand = lefts[keep] | (rights[keep] << shift)
        invocations += int(cand.size)
        hit_parts.append(cand[kernels.kmap_masks(cand, n + 1, workers=workers) != 0])
    if invocations > budget:
        raise AssertionError(f"detector sweep {invocations} exceeds budget {budget}")
    hits = np.concatenate(hit_parts) if hit_parts else np.empty(0, dtype=np.uint64)
    parts.append(hits)

    produced = np.unique(np.concatenate(parts))
    tallies = {
        "constant_half": 4 * total,
        "noncanalizing_constant_tail": 4 * noncanal,
        "diagonal": int(x),
        "complement_skipped": int(core.size),
        "noncanalizing_pairs_skipped": noncanal * noncanal,
        "checked_pairs": invocations,
        "checked_hits": int(hits.size),
    }
    return GenerationReport(
        n_source=n,
        produced=[BooleanFunction.from_packed(int(v), n + 1) for v in produced],
        detector_invocations=invocations,
        budget=budget,
        category_tallies=tallies,
    )


# ---------------------------------------------------------------------------
# counting concatenations seeded by a distance-1 function

def distance_one_concat_formula(n):
    """Closed count of canalizing concatenations seeded by a distance-1 half.

    Evaluates 2 * sum_{x=1..n} C(n,x) * 2^(2^n / 2^x) * (-1)^(x-1) exactly.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 * sum(
        comb(n, x) * (1 << ((1 << n) >> x)) * (-1) ** (x - 1) for x in range(1, n + 1)
    )


@dataclass
class DistanceOneConcatCount:
    """Brute-force count next to the closed formula, with variant readings."""

    n: int
    formula_value: int
    bruteforce_value: int
    interpretation: str
    variants: dict


def distance_one_concat_bruteforce(f):
    """Count, over every tail g and both sides, the canalizing concatenations.

    Requires f at unit distance from a constant table. The canonical count
    (bruteforce_value) takes concatenation events whose result is canalizing
    through one of the original n variables; the variants record the
    any-witness event count and the distinct-function count alongside.
    """
    if f.ncf_distance() != 1:
        raise ValueError("seed must be at distance 1 from a constant table")
    n = f.n
    size = 1 << n
    shift = np.uint64(size)
    fp = np.uint64(f.packed)
    tails = kernels.all_packed(n)
    left = fp | (tails << shift)
    right = tails | (fp << shift)
    orig_bits = np.uint32((1 << (4 * n)) - 1)

    lm = kernels.oracle_masks(left, n + 1)
    rm = kernels.oracle_masks(right, n + 1)
    lhit = (lm & orig_bits) != 0
    rhit = (rm & orig_bits) != 0
    events_original = int(np.count_nonzero(lhit) + np.count_nonzero(rhit))
    events_any = int(np.count_nonzero(lm != 0) + np.count_nonzero(rm != 0))
    distinct_original = int(np.unique(np.concatenate([left[lhit], right[rhit]])).size)

    return DistanceOneConcatCount(
        n=n,
        formula_value=distance_one_concat_formula(n),
        bruteforce_value=events_original,
        interpretation="concatenation events canalizing through an original variable, both sides",
        variants={
            "events_original_vars": events_original,
            "events_any_witness": events_any,
            "distinct_functions_original_vars": distinct_original,
        },
    )
