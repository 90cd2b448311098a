# coding: utf-8
"""
Description:
    Popular feasible matchings in marriage instances with critical vertices.
    The main entry points are re-exported here: the instance and matching types, the text formats
    and the popular edge solver.
"""

from .config import Config
from .exceptions import MatchingError
from .formats import parse_instance, parse_matching, serialize_instance, serialize_matching
from .models import Matching, MarriageInstance, has_feasible, is_feasible, normalize_critical_side
from .solver import PopularEdgeSolver, decide_popular_edge, dominant_fm, min_size_pfm, witness

__version__ = "1.0.1"
