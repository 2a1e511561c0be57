"""Named reference checks behind the `verify-paper` CLI subcommand.

Each check pins one published count, identity, or closure property and
recomputes it from scratch at full desk scale: exhaustive over all
functions up to 4 variables, and one million fixed-seed samples per
variable count at 5 and 6.
"""

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import BooleanFunction, constant, parse_truth_table
from .generation import (
    canalizing_packed,
    distance_one_concat_bruteforce,
    enumerate_canalizing,
    generate_canalizing_next,
)
from .kmap import detector_divergences, kmap_witnesses, oracle_witnesses
from .ncf import generate_ncfs, ncf_census, ncf_decompose, ncf_matrix
from .pncf import pncf_census, pncf_classify, reconstruct

SAMPLE_COUNT = 1_000_000
SAMPLE_SEED = 20101

KNOWN_CANALIZING_N5 = "0xD0F0F0F0"

CANALIZING_CLASS_N2 = [
    "1100", "1101", "1110", "1111", "0000", "0001", "0010",
    "0011", "0111", "1011", "0100", "0101", "1000", "1010",
]


@dataclass
class Check:
    """One named verification with its expected and computed values."""

    name: str
    expected: object
    computed: object
    detail: str = ""

    @property
    def passed(self):
        return self.expected == self.computed


@dataclass
class VerificationSuiteResult:
    checks: list
    elapsed: float

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [
                {
                    "name": c.name,
                    "expected": _jsonable(c.expected),
                    "computed": _jsonable(c.computed),
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def _jsonable(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


def sample_packed(n, count=SAMPLE_COUNT, seed=SAMPLE_SEED):
    """Fixed-seed packed samples of n-variable truth tables."""
    rng = np.random.default_rng(seed + n)
    if n <= 5:
        out = rng.integers(0, 1 << (1 << n), size=count, dtype=np.uint64)
    else:
        hi = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
        lo = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
        out = (hi << np.uint64(32)) | lo
    return out


def _closure_checks(checks):
    """Concatenation closure facts, exhaustive at 2 and 3 variables."""
    for n in (2, 3):
        size = 1 << n
        full = np.uint64((1 << size) - 1)
        shift = np.uint64(size)
        funcs = kernels.all_packed(n)
        canal = kernels.oracle_masks(funcs, n) != 0
        canal_set = funcs[canal]
        noncanal_set = funcs[~canal]

        comp_ok = bool(np.array_equal(canal, (kernels.oracle_masks(funcs ^ full, n) != 0)))
        checks.append(Check(f"closure-complement-n{n}", True, comp_ok,
                            "f canalizing iff its complement is"))

        diag = canal_set | (canal_set << shift)
        checks.append(Check(f"closure-self-concat-n{n}", True,
                            bool(np.all(kernels.oracle_masks(diag, n + 1) != 0)),
                            "ff canalizing for every canalizing f"))

        anti = canal_set | ((canal_set ^ full) << shift)
        verdicts = kernels.oracle_masks(anti, n + 1) != 0
        expected = (canal_set == 0) | (canal_set == full)
        checks.append(Check(f"closure-complement-concat-n{n}", True,
                            bool(np.array_equal(verdicts, expected)),
                            "ff' canalizing exactly for constant f"))

        lefts = np.repeat(noncanal_set, funcs.size)
        rights = np.tile(funcs, noncanal_set.size)
        cat = lefts | (rights << shift)
        verdicts = kernels.oracle_masks(cat, n + 1) != 0
        expected = (rights == 0) | (rights == full)
        checks.append(Check(f"closure-noncanalizing-head-n{n}", True,
                            bool(np.array_equal(verdicts, expected)),
                            "non-canalizing f: fg canalizing iff g constant"))

        for cval, tag in ((np.uint64(0), "zeros"), (full, "ones")):
            head = cval | (funcs << shift)
            tail = funcs | (cval << shift)
            ok = bool(np.all(kernels.oracle_masks(head, n + 1) != 0)
                      and np.all(kernels.oracle_masks(tail, n + 1) != 0))
            checks.append(Check(f"closure-constant-{tag}-half-n{n}", True, ok,
                                "a constant half makes every concatenation canalizing"))

        lefts = np.repeat(noncanal_set, noncanal_set.size)
        rights = np.tile(noncanal_set, noncanal_set.size)
        both = lefts | (rights << shift)
        checks.append(Check(f"closure-noncanalizing-pairs-n{n}", True,
                            bool(np.all(kernels.oracle_masks(both, n + 1) == 0)),
                            "two non-canalizing halves never concatenate canalizing"))


def _property_checks(checks):
    """Round-trip, soundness, and symmetry invariants."""
    ok = True
    for n in (1, 2, 3):
        for packed in kernels.all_packed(n):
            f = BooleanFunction.from_packed(int(packed), n)
            if parse_truth_table(f.to_binary()) != f:
                ok = False
            if n >= 2 and parse_truth_table(f.to_hex()) != f:
                ok = False
    checks.append(Check("parse-format-roundtrip", True, ok,
                        "parse inverts format, exhaustive through 3 variables"))

    rng = np.random.default_rng(SAMPLE_SEED)
    ok = True
    witness_map_ok = True
    for n in (2, 3, 4, 5):
        for packed in rng.integers(0, 1 << (1 << n), size=_sample_size(n), dtype=np.uint64):
            f = BooleanFunction.from_packed(int(packed), n)
            wits = oracle_witnesses(f)
            for w in wits:
                r = f.restrict(w.variable, w.input)
                if not (r.is_constant() and r.evaluate(0) == w.output):
                    ok = False
            flipped = {(w.variable, w.input, 1 - w.output) for w in wits}
            comp = {(w.variable, w.input, w.output) for w in oracle_witnesses(f.complement())}
            if comp != flipped:
                witness_map_ok = False
    checks.append(Check("witness-soundness-sampled", True, ok,
                        "every reported witness passes the restriction test"))
    checks.append(Check("complement-witness-map-sampled", True, witness_map_ok,
                        "witnesses of f' are those of f with outputs flipped"))

    ok = True
    for n in (2, 3, 4):
        for f in generate_ncfs(n):
            d = ncf_decompose(f)
            if d is None or d.to_function() != f:
                ok = False
                break
    checks.append(Check("ncf-reconstruction-roundtrip", True, ok,
                        "every NCF decomposition rebuilds its table exactly"))

    ok = True
    for packed in canalizing_packed(3):
        f = BooleanFunction.from_packed(int(packed), 3)
        if reconstruct(3, pncf_classify(f)) != f:
            ok = False
            break
    checks.append(Check("pncf-reconstruction-roundtrip", True, ok,
                        "every depth classification rebuilds its table exactly"))


def _sample_size(n):
    # sample sizes for the python-level property loops
    return {2: 16, 3: 120, 4: 160, 5: 120}[n]


def build_checks(workers=1):
    """Compute every verification check. Heavy; returns the full list."""
    checks = []

    # exhaustive class sizes
    sizes = {n: int(canalizing_packed(n).size) for n in (2, 3, 4)}
    checks.append(Check("canalizing-count-n2", 14, sizes[2],
                        "canalizing functions on 2 variables"))
    class2 = {f.to_binary() for f in enumerate_canalizing(2)}
    checks.append(Check("canalizing-set-n2", True,
                        class2 == set(CANALIZING_CLASS_N2),
                        "the 14 two-variable tables match the reference list"))
    checks.append(Check("canalizing-count-n3", 120, sizes[3],
                        "canalizing functions on 3 variables"))
    checks.append(Check("noncanalizing-count-n3", 136, 256 - sizes[3],
                        "non-canalizing functions on 3 variables"))
    checks.append(Check("canalizing-count-n4", 3514, sizes[4],
                        "canalizing functions on 4 variables"))

    # detector equivalence
    for n in (3, 4):
        count, _ = detector_divergences(n, workers=workers)
        checks.append(Check(f"detector-equivalence-n{n}", 0, count,
                            f"K-map recursion vs restriction oracle, all {1 << (1 << n)} tables"))
    for n in (5, 6):
        packed = sample_packed(n)
        if n == 5:
            packed = np.concatenate(
                [np.array([parse_truth_table(KNOWN_CANALIZING_N5).packed], dtype=np.uint64), packed]
            )
        count, _ = detector_divergences(n, packed=packed, workers=workers)
        checks.append(Check(f"detector-equivalence-n{n}-sampled", 0, count,
                            f"{packed.size} fixed-seed samples"))

    # worked single functions
    known = parse_truth_table(KNOWN_CANALIZING_N5)
    wits = sorted(oracle_witnesses(known))
    checks.append(Check("known-function-witness", [(3, 1, 0)],
                        [tuple(w) for w in wits],
                        f"{KNOWN_CANALIZING_N5} has the single witness (x3, 1, 0)"))
    checks.append(Check("known-function-kmap-witness", [(3, 1, 0)],
                        [tuple(w) for w in sorted(kmap_witnesses(known))],
                        "the K-map route agrees on the witness"))
    checks.append(Check("xor-not-canalizing", 0, len(oracle_witnesses(parse_truth_table("0110"))),
                        "two-variable parity has no witness"))

    _closure_checks(checks)

    # generation completeness and budget
    for n in (2, 3):
        report = generate_canalizing_next(enumerate_canalizing(n), workers=workers)
        target = set(canalizing_packed(n + 1).tolist())
        checks.append(Check(f"generation-completeness-n{n}to{n+1}", True,
                            set(int(p) for p in report.produced_packed) == target,
                            "concatenation sweep reproduces the exact class"))
        checks.append(Check(f"generation-budget-n{n}", True,
                            report.detector_invocations <= report.budget,
                            f"{report.detector_invocations} invocations within {report.budget}"))

    # distance-1 concatenation counts
    for n, seed_bits in ((2, "0001"), (3, "00000001")):
        result = distance_one_concat_bruteforce(parse_truth_table(seed_bits))
        checks.append(Check(f"distance-one-formula-n{n}",
                            {2: 12, 3: 76}[n], result.formula_value,
                            "closed alternating-sum value"))
        checks.append(Check(f"distance-one-bruteforce-n{n}",
                            {2: 12, 3: 76}[n], result.bruteforce_value,
                            result.interpretation))

    # census matrices
    m3, m4 = ncf_matrix(3), ncf_matrix(4)
    checks.append(Check("ncf-matrix-n3", [[4, 4], [0, 4], [0, 4]],
                        [list(r) for r in m3.cells], "recursion matrix, 3 variables"))
    checks.append(Check("ncf-matrix-n4",
                        [[8, 24, 24, 8], [0, 16, 24, 8], [0, 8, 24, 8], [0, 0, 24, 8]],
                        [list(r) for r in m4.cells], "recursion matrix, 4 variables"))
    checks.append(Check("ncf-total-n3", 64, m3.n_c, "NCF count, 3 variables"))
    checks.append(Check("ncf-total-n4", 736, m4.n_c, "NCF count, 4 variables"))

    for n, matrix in ((3, m3), (4, m4)):
        census = ncf_census(n)
        checks.append(Check(f"ncf-census-total-n{n}", matrix.n_c, int(census.sum()),
                            "exhaustive decomposition census total"))
        checks.append(Check(f"ncf-census-columns-n{n}", True,
                            bool(np.array_equal(census.sum(axis=0),
                                                4 * matrix.as_array().sum(axis=0))),
                            "per-distance column totals equal 4x the matrix columns"))
        checks.append(Check(f"ncf-census-cells-n{n}", True,
                            bool(np.array_equal(census, 4 * matrix.as_array())),
                            "per-cell census equals 4x the matrix"))

    for n in (2, 3, 4):
        generated = {f.packed for f in generate_ncfs(n)}
        decomposed = {
            int(p) for p in canalizing_packed(n)
            if ncf_decompose(BooleanFunction.from_packed(int(p), n)) is not None
        }
        checks.append(Check(f"ncf-generation-set-n{n}", True, generated == decomposed,
                            "merger construction equals the decomposition census"))

    # depth census
    census4 = pncf_census(4)
    checks.append(Check("pncf-depth1-n4", {"constant": 10, "non_canalizing": 2176, "total": 2186},
                        census4["1"], "depth-1 bucket, constants included"))
    checks.append(Check("pncf-depth2-n4", 336, census4["2"]["total"], "depth-2 bucket"))
    checks.append(Check("pncf-depth3-n4", 256, census4["3"]["total"], "depth-3 bucket"))
    checks.append(Check("pncf-fully-nested-n4", 736, census4["fully_nested"],
                        "fully nested bucket"))
    checks.append(Check("pncf-partition-n4", 3514,
                        census4["1"]["total"] + census4["2"]["total"]
                        + census4["3"]["total"] + census4["fully_nested"],
                        "depth buckets partition the canalizing class"))
    census3 = pncf_census(3)
    checks.append(Check("pncf-partition-n3", 120, census3["total"],
                        "three-variable classification covers the class"))

    _property_checks(checks)
    return checks


def run_verification(workers=1, stream=None, checks=None):
    """Run the suite, printing one PASS/FAIL line per check."""
    t0 = time.perf_counter()
    if checks is None:
        checks = build_checks(workers=workers)
    result = VerificationSuiteResult(checks=checks, elapsed=time.perf_counter() - t0)
    if stream is not None:
        for c in checks:
            tag = "PASS" if c.passed else "FAIL"
            stream.write(f"{tag} {c.name}: expected {c.expected!r}, computed {c.computed!r}\n")
        overall = "PASS" if result.passed else "FAIL"
        stream.write(f"{overall} overall: {sum(c.passed for c in checks)}/{len(checks)} "
                     f"checks in {result.elapsed:.1f}s\n")
    return result
