"""Stability of Turán's theorem: exact tools for small graphs.

Constructions of Turán and pentagonal graphs, an exact solver for the
minimum number of edges whose deletion makes a graph r-partite, isomorph-free
enumeration of clique-free graphs, exhaustive checks of the supporting
lemmas, the reduction to pentagonal specs, and the stability frontier.
"""

from .canon import are_isomorphic, canonical_form, canonical_key
from .constructions import (
    BlowupSpec,
    PentagonalSpec,
    blowup,
    complete_multipartite,
    ptg_build,
    sample_ptg,
    turan_graph,
    turan_number,
    turan_part_sizes,
    turan_spec,
)
from .enumeration import EnumSpec, enumerate_clique_free, ingest_graph6
from .frontier import FrontierRecord, PtgOptimum, asymptotic_dr, asymptotic_shape, frontier, optimize_ptg
from .graph import Graph, Partition, clique_number, has_clique, is_r_partite, proper_r_coloring
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .matching import find_matching, maximum_matching
from .partition import DrResult, dr_bruteforce, dr_exact, max_crossing_extend, ptg_dr, symmetrize
from .reduction import (
    DominationResult,
    ReductionError,
    ReductionInapplicable,
    ReductionState,
    check_domination,
    dense_reduce,
    general_reduce,
    weeding_peel,
)
from .verify import VerificationReport, near_partite_witness

__version__ = "0.1.0"
