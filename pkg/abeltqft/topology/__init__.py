from abeltqft.topology.groups import (
    AbelianGroup,
    ChainComplex,
    TorsionElement,
    group_from_presentation,
    homology_of_complex,
    torsion_elements,
)
from abeltqft.topology.linking import (
    FreeOriginVector,
    LinkingForm,
    OriginClass,
    ZeroModeVector,
    bf_origin_phase,
    cs_origin_phase,
    eval_q,
    linking_form_from_matrix,
    linking_form_of_manifold,
    linking_form_of_presentation,
    pairing_free_free,
    pairing_free_zero_mode,
    pairing_origins,
    pairing_torsion_free,
    pairing_torsion_zero_mode,
)
from abeltqft.topology.manifolds import (
    Manifold,
    connected_sum,
    continued_fraction,
    lens_space,
    load_matrix_file,
    poincare_sphere,
    s1_x_s2,
    save_matrix_file,
    sphere3,
)
from abeltqft.topology.spec_parser import parse_manifold

__all__ = [
    "AbelianGroup",
    "ChainComplex",
    "TorsionElement",
    "group_from_presentation",
    "homology_of_complex",
    "torsion_elements",
    "FreeOriginVector",
    "LinkingForm",
    "OriginClass",
    "ZeroModeVector",
    "bf_origin_phase",
    "cs_origin_phase",
    "eval_q",
    "linking_form_from_matrix",
    "linking_form_of_manifold",
    "linking_form_of_presentation",
    "pairing_free_free",
    "pairing_free_zero_mode",
    "pairing_origins",
    "pairing_torsion_free",
    "pairing_torsion_zero_mode",
    "Manifold",
    "connected_sum",
    "continued_fraction",
    "lens_space",
    "load_matrix_file",
    "poincare_sphere",
    "s1_x_s2",
    "save_matrix_file",
    "sphere3",
    "parse_manifold",
]
