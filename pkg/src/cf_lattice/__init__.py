"""Exact-arithmetic toolkit for integral lattices, root systems, plethysm, and spectra."""

from .lattices import (
    DegenerateLatticeError,
    DiscriminantData,
    FiniteQuadraticForm,
    GenusInvariants,
    Lattice,
    Sublattice,
    direct_sum,
    discriminant_data,
    discriminant_group,
    fqf_isomorphic,
    genus_invariants,
    inner_product,
    lattice_from_json,
    lattice_to_json,
    orthogonal_complement,
    saturation,
    saturation_index,
    span_sublattice,
    standard_lattice,
    vector_divisibility,
)
from .roots import (
    Isometry,
    RootSystemLabel,
    disc_action,
    find_long_root,
    identify_root_system,
    reflection,
    roots,
    short_vectors,
)
from .niemeier import (
    GlueGroup,
    NiemeierEntry,
    construct_niemeier,
    embed_e6,
    entries_with_e_summand,
    niemeier_table,
    overlattice,
)

__all__ = [
    "DegenerateLatticeError",
    "DiscriminantData",
    "FiniteQuadraticForm",
    "GenusInvariants",
    "GlueGroup",
    "Isometry",
    "Lattice",
    "NiemeierEntry",
    "RootSystemLabel",
    "Sublattice",
    "construct_niemeier",
    "direct_sum",
    "disc_action",
    "discriminant_data",
    "discriminant_group",
    "embed_e6",
    "entries_with_e_summand",
    "find_long_root",
    "fqf_isomorphic",
    "genus_invariants",
    "identify_root_system",
    "inner_product",
    "lattice_from_json",
    "lattice_to_json",
    "niemeier_table",
    "orthogonal_complement",
    "overlattice",
    "reflection",
    "roots",
    "saturation",
    "saturation_index",
    "short_vectors",
    "span_sublattice",
    "standard_lattice",
    "vector_divisibility",
]
