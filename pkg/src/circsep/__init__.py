"""Circular separation dimension toolkit."""

from .construct import construct_two_outerplanar, sp_construct
from .embedding import TwoOuterEmbedding, is_outerplanar_small
from .exact import exact_pi_circ
from .graph import CircularOrdering, Graph, LinearOrdering, SeparationFamily, verify_family

__version__ = "0.1.0"
