"""Exact characters, p-filtrations and homological dimensions for S(2,r), S_q(2,r) and S(3,r)."""

from .blocks import (
    LinkageClass,
    dot_orbit,
    hw_nabla_quotient,
    hw_simple_quotient,
    linkage_classes,
    linked,
    same_block,
)
from .characters import (
    FormalCharacter,
    NegativeMultiplicity,
    NonDominantResidue,
    decompose_good,
    decompose_simples,
    frobenius_twist,
    hw_of,
    nabla_p_character,
    simple_character,
    tensor,
    weyl_character,
    weyl_dimension,
)
from .filtrations import (
    ExtTableEntry,
    GoodResolution,
    NablaPSection,
    PFiltration,
    edge_allowed,
    euler_check,
    g1_ext_table,
    good_resolution,
    m_module_sections,
    p_filtration,
    xanth_sections,
)
from .homdim import (
    HomDimReport,
    g_lambda,
    gfd_schur,
    gfd_schur_q2,
    gfd_simple,
    gfd_simple_q2,
    gfd_simple_schur,
    glob_schur_formula,
    glob_schur_q2,
)
from .weights import (
    GlPartition,
    PDecomposition,
    RestrictedClass,
    SlWeight,
    dominance_leq,
    enumerate_partitions,
    is_primitive,
    p_decompose,
    restricted_class,
    sl2_canonical_decomposition,
    steinberg_depth,
    to_sl_weight,
    weight,
)

__version__ = "0.1.0"
