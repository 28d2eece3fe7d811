"""Constant-weight codes: Johnson-type bounds, an exact small-instance oracle,
and a randomized hypergraph-matching construction for even minimum distance."""

from .bounds import BoundValue, johnson_bound, johnson_t, main_term
from .constraints import BAssignment, CandidateFamily, enumerate_X, sample_B, words_on_support
from .core import Code, CodeParams, hamming_distance, min_distance, support, verify_code, weight
from .degrees import expected_degree, exact_mean_degree_over_B, degree_concentration_mc, tuple_degree
from .matching import construct_code, construct_code_odd, greedy_matching
from .oracle import max_code_exact

__version__ = "0.1.0"
