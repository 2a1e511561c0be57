"""Canalizing Boolean function toolbox.

Classify truth tables as canalizing / nested canalizing / partially
nested canalizing, generate the classes by concatenation and
canalizing-variable insertion, and reproduce the published census counts
by exhaustive enumeration.
"""

from .core import (
    BooleanFunction,
    constant,
    format_truth_table,
    parse_truth_table,
    variable_pattern,
)
from .generation import (
    DistanceOneConcatCount,
    GenerationReport,
    detector_budget,
    distance_one_concat_bruteforce,
    distance_one_concat_formula,
    enumerate_canalizing,
    generate_canalizing_next,
)
from .kmap import (
    CanalizingWitness,
    KMap,
    build_kmap,
    detector_divergences,
    is_canalizing,
    kmap_witnesses,
    oracle_witnesses,
)
from .ncf import (
    CanalizingLayer,
    NcfCensusMatrix,
    NcfDecomposition,
    generate_ncfs,
    ncf_census,
    ncf_decompose,
    ncf_matrix,
)
from .pncf import (
    ConstantTail,
    FullyNested,
    NonCanalizingTail,
    PncfClassification,
    pncf_census,
    pncf_classify,
)

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "CanalizingLayer",
    "CanalizingWitness",
    "ConstantTail",
    "DistanceOneConcatCount",
    "FullyNested",
    "GenerationReport",
    "KMap",
    "NcfCensusMatrix",
    "NcfDecomposition",
    "NonCanalizingTail",
    "PncfClassification",
    "build_kmap",
    "constant",
    "detector_budget",
    "detector_divergences",
    "distance_one_concat_bruteforce",
    "distance_one_concat_formula",
    "enumerate_canalizing",
    "format_truth_table",
    "generate_canalizing_next",
    "generate_ncfs",
    "is_canalizing",
    "kmap_witnesses",
    "ncf_census",
    "ncf_decompose",
    "ncf_matrix",
    "oracle_witnesses",
    "parse_truth_table",
    "pncf_census",
    "pncf_classify",
    "variable_pattern",
]
