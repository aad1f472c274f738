"""Kauffman bracket skein modules at desk scale: brackets, crossingless-matching bases, braid actions, gluing."""

from .laurent import DELTA, LaurentPoly
from .diagram import FramedBraidWord, TangleDiagram, parse_braid, parse_tangle
from .bracket import kauffman_bracket, state_sum_oracle
from .tlskein import Matching, SkeinVector, enumerate_basis, reduce
from .braid import act, act_right, invert
from .glue import AnnularElement, annular_trace, pair, quotient_rank

__all__ = [
    "DELTA",
    "LaurentPoly",
    "FramedBraidWord",
    "TangleDiagram",
    "parse_braid",
    "parse_tangle",
    "kauffman_bracket",
    "state_sum_oracle",
    "Matching",
    "SkeinVector",
    "enumerate_basis",
    "reduce",
    "act",
    "act_right",
    "invert",
    "AnnularElement",
    "annular_trace",
    "pair",
    "quotient_rank",
]
