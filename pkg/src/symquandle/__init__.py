"""Symmetric quandle presentations of plat closures of braided surfaces,
coloring numbers by finite symmetric quandles, and plat index bounds."""

from .braid import (
    BraidWord,
    Permutation,
    artin_endo,
    braid_permutation,
    braids_equal,
    hilden_generator,
    is_trivial,
    preserves_pairing,
)
from .braided_surface import (
    BraidSystem,
    BraidSystemEntry,
    NonGenuineError,
    adequacy_necessary,
    apply_slides,
    boundary_braid,
    component_count,
    entry_braid,
    euler_characteristic,
    family_bmp,
    family_bmpg,
    genus_if_orientable,
    is_genuine,
    load_braid_system,
    plat_lower_bound,
    save_braid_system,
    slide,
)
from .coloring import (
    Coloring,
    ColoringCeilingError,
    coloring_count_for_system,
    count_colorings,
    enumerate_colorings,
)
from .free_group import FreeGroupEndo, FreeWord, apply_endo, compose_endo, is_identity_endo
from .presentation import (
    PresentationError,
    SymQuandlePresentation,
    braided_surface_presentation,
    eliminate_generator,
    eliminate_wicket_generators,
    plat_presentation,
    to_group_presentation,
)
from .symmetric_quandle import (
    FiniteSymQuandle,
    FsqElement,
    InvalidQuandleError,
    braid_fsq_images,
    dihedral,
    evaluate,
    fsq_make,
    fsq_op,
    fsq_rho,
    good_involutions,
    is_kei,
    load_quandle,
    trivial_quandle,
    validate,
)

__version__ = "0.1.0"
