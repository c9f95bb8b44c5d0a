"""Exact graded characters of coinvariant algebras of finite Weyl groups.

The combinatorial side sums signed per-element weights over Bruhat levels;
the oracle side expands the graded trace series of the reflection
representation; the divided-difference side verifies the reflection action
on the basis of the coinvariant algebra symbolically.  Everything is exact
integer or rational arithmetic.
"""

from .cartan import (
    CartanDatum,
    ChainDecomposition,
    LabelError,
    NotTypeA,
    cartan_from_label,
    type_a_chains,
)
from .characters import (
    FactorizationFailed,
    degrees,
    molien_character,
    packable_partitions,
    poincare_polynomial,
    theorem4_character,
    verify_theorem4,
)
from .graded import GradedCharacter
from .parabolic import (
    MuPacking,
    Unpackable,
    all_packings,
    pack_partition,
    packing_discrepancy_report,
    v_mu,
    weight_mu,
)
from .roots import NonFiniteType, RootVector, pairing, positive_roots, simple_root
from .schubert import (
    ConventionFlags,
    DEFAULT_FLAGS,
    NotInSpan,
    SchubertCalculus,
    all_flag_combinations,
    resolve_conventions,
    schubert_calculus,
    verify_basis_property,
    verify_corollary2,
    verify_corollary3,
    verify_theorem1,
)
from .typea import (
    chi_typea,
    inversions,
    m_statistic,
    weight_mu_perm,
    young_decompose,
)
from .weyl import BudgetExceeded, Level, WeylElement, WeylGroup, weyl_group

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CartanDatum",
    "ChainDecomposition",
    "ConventionFlags",
    "DEFAULT_FLAGS",
    "FactorizationFailed",
    "GradedCharacter",
    "LabelError",
    "Level",
    "MuPacking",
    "NonFiniteType",
    "NotInSpan",
    "NotTypeA",
    "RootVector",
    "SchubertCalculus",
    "Unpackable",
    "WeylElement",
    "WeylGroup",
    "all_flag_combinations",
    "all_packings",
    "cartan_from_label",
    "chi_typea",
    "degrees",
    "inversions",
    "m_statistic",
    "molien_character",
    "pack_partition",
    "packable_partitions",
    "packing_discrepancy_report",
    "pairing",
    "poincare_polynomial",
    "positive_roots",
    "resolve_conventions",
    "schubert_calculus",
    "simple_root",
    "theorem4_character",
    "type_a_chains",
    "v_mu",
    "verify_basis_property",
    "verify_corollary2",
    "verify_corollary3",
    "verify_theorem1",
    "verify_theorem4",
    "weight_mu",
    "weight_mu_perm",
    "weyl_group",
    "young_decompose",
]
