"""Janet involutive bases of polynomial ideals over the rationals."""

from .algorithms import ALGORITHMS, compute, gerdt, invbasis, vargerdt
from .engine import CriteriaConfig, RunStats, TimeLimitExceeded, tail_autoreduce
from .ordering import DEGREVLEX, LEX, MonomialOrder, get_order
from .poly import Polynomial, Term, VariableContext
from .systems import generate_cyclic, load_fixture, parse_system

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "CriteriaConfig",
    "DEGREVLEX",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "RunStats",
    "Term",
    "TimeLimitExceeded",
    "VariableContext",
    "compute",
    "gerdt",
    "generate_cyclic",
    "get_order",
    "invbasis",
    "load_fixture",
    "parse_system",
    "tail_autoreduce",
    "vargerdt",
]
