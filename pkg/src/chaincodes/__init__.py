"""Constacyclic codes of length n*p^s over finite chain rings.

Exact construction, classification, duals, distances and Rosenbloom-Tsfasman
weight distributions for repeated-root constacyclic codes over the two
concrete chain-ring families GR(p^e, m) and F_{p^m}[u]/<u^e>, together with a
brute-force oracle that re-derives everything from definitions at desk scale.
"""

from .rings import (
    ChainRing,
    ResidueField,
    NonUnitError,
    make_ring,
    teich_root,
    decompose_unit,
)
from .codes import (
    CapExceeded,
    CodeSpec,
    FactorComponent,
    Factorization,
    IdealSpec,
    census,
    classify_ideals,
    code_dual,
    code_generators,
    code_size,
    dual_ideal,
    ideal_generators,
    ideal_size,
    isodual_codes,
    kappa,
    lemma_fac,
    unit_case_chain,
)

__all__ = [
    "ChainRing",
    "ResidueField",
    "NonUnitError",
    "make_ring",
    "teich_root",
    "decompose_unit",
    "CapExceeded",
    "CodeSpec",
    "FactorComponent",
    "Factorization",
    "IdealSpec",
    "census",
    "classify_ideals",
    "code_dual",
    "code_generators",
    "code_size",
    "dual_ideal",
    "ideal_generators",
    "ideal_size",
    "isodual_codes",
    "kappa",
    "lemma_fac",
    "unit_case_chain",
]

__version__ = "0.1.0"
