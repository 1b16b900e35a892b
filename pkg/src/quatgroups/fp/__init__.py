"""Finitely presented groups: words, coset enumeration, subgroups, abelianization."""

from .abelian import (
    AbelianGroup,
    abelianization,
    commutator_relators,
    derived_ab_chain,
    derived_subgroup_presentation,
    relation_matrix,
    smith_normal_form,
)
from .presentation import Presentation, free_group
from .schreier import SchreierData, reidemeister_schreier, rewrite, schreier_data
from .todd_coxeter import DEFAULT_COSET_LIMIT, CosetTable, Overflow, coset_index, todd_coxeter
from .words import (
    Word,
    canonical_cyclic,
    commutator,
    cyclic_reduce,
    exponent_sums,
    format_word,
    format_word_powers,
    free_reduce,
    inverse,
    is_conjugate,
    parse_word,
    power,
)

__all__ = [
    "AbelianGroup",
    "CosetTable",
    "DEFAULT_COSET_LIMIT",
    "Overflow",
    "Presentation",
    "SchreierData",
    "Word",
    "abelianization",
    "canonical_cyclic",
    "commutator",
    "commutator_relators",
    "coset_index",
    "cyclic_reduce",
    "derived_ab_chain",
    "derived_subgroup_presentation",
    "exponent_sums",
    "format_word",
    "format_word_powers",
    "free_group",
    "free_reduce",
    "inverse",
    "is_conjugate",
    "parse_word",
    "power",
    "reidemeister_schreier",
    "relation_matrix",
    "rewrite",
    "schreier_data",
    "smith_normal_form",
    "todd_coxeter",
]
