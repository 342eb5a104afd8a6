"""Exact computations for gap-p Virasoro algebras and their weight modules."""

from .algebra import AlgebraElement, Gen, bracket, check_lie_axioms, generator_bracket, vir_embedding_check
from .mois import (
    FMatrix,
    MoisSpec,
    check_module_axioms,
    classify_reducibility,
    iso_test,
    linkage_graph,
    mois_act,
    validate_f,
)
from .scalars import InputError
from .verma import HighestWeight, singular_vectors, verma_verdict

__all__ = [
    "AlgebraElement", "FMatrix", "Gen", "HighestWeight", "InputError", "MoisSpec",
    "bracket", "check_lie_axioms", "check_module_axioms", "classify_reducibility",
    "generator_bracket", "iso_test", "linkage_graph", "mois_act", "singular_vectors",
    "validate_f", "verma_verdict", "vir_embedding_check",
]
