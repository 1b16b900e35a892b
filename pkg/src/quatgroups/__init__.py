"""Exact arithmetic for quaternionic lattice groups Gamma_{p,l} and Q_{p,l}."""

from .errors import QuatGroupsError
from .quat import CentralScalar, ProjQuat, Quat, eval_word, format_quat, parse_quat, qnorm
from .xsets import enumerate_Xq, n_invariant, n_set

__version__ = "0.1.0"

__all__ = [
    "CentralScalar",
    "ProjQuat",
    "Quat",
    "QuatGroupsError",
    "__version__",
    "enumerate_Xq",
    "eval_word",
    "format_quat",
    "n_invariant",
    "n_set",
    "parse_quat",
    "qnorm",
]
