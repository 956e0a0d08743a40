"""Kurosaki's bi-infinite ternary word and exact fractional-power analysis."""

from .automaton import (automaton_table, from_balanced_ternary, symbol_at_infinite,
                        to_balanced_ternary)
from .power import (FreenessVerdict, Mode, RepetitionOccurrence, avoidance_search,
                    check_freeness, exponent, find_violations, least_period, max_exponent,
                    parse_threshold)
from .verify import CheckReport, extend_occurrence, leader_propagation, run_all
from .words import (IDENTITY, RHO, SIGMA, Permutation3, ResourceLimitError, WordError,
                    apply_permutation, extract_middles, generate, phi, symbol_at, triples)

__all__ = [
    "IDENTITY", "RHO", "SIGMA", "Permutation3", "ResourceLimitError", "WordError",
    "apply_permutation", "extract_middles", "generate", "phi", "symbol_at", "triples",
    "FreenessVerdict", "Mode", "RepetitionOccurrence", "avoidance_search", "check_freeness",
    "exponent", "find_violations", "least_period", "max_exponent", "parse_threshold",
    "automaton_table", "from_balanced_ternary", "symbol_at_infinite", "to_balanced_ternary",
    "CheckReport", "extend_occurrence", "leader_propagation", "run_all",
]
