"""kucalc: exact-arithmetic Euler-pairing, Riemann-Roch and lattice-lifting
calculator for the numerical Grothendieck lattices of Fano double covers."""

from .chow import GradedClass, VarietyModel, make_variety_model
from .grr import CoverSetup, ch_line_bundle, divisor_pushforward, euler_pairing, make_cover_setup
from .knum import (
    KnumClass,
    KuBasis,
    MukaiVector,
    euler_form,
    express_in_basis,
    gram_from_ch,
    make_ku_basis,
    mukai_pairing,
    mukai_vector,
    sheaf_mukai,
)
from .verify import run_verification
from .functor import image_lattice, kernel_lattice, mutate_class, phi_matrix, phi_star
from .lift import (
    LiftCertificate,
    all_lifts_inequality,
    brute_force_lift,
    check_wall_inequality,
    closed_form_lift_gm3,
    closed_form_lift_qds,
    expected_dimension,
)
from .k3picard import PicardLatticeReport, orthogonal_primitive, validate_lattice

__version__ = "0.1.0"

__all__ = [
    "GradedClass",
    "VarietyModel",
    "make_variety_model",
    "CoverSetup",
    "ch_line_bundle",
    "divisor_pushforward",
    "euler_pairing",
    "make_cover_setup",
    "KnumClass",
    "KuBasis",
    "MukaiVector",
    "euler_form",
    "express_in_basis",
    "gram_from_ch",
    "make_ku_basis",
    "mukai_pairing",
    "mukai_vector",
    "sheaf_mukai",
    "run_verification",
    "image_lattice",
    "kernel_lattice",
    "mutate_class",
    "phi_matrix",
    "phi_star",
    "LiftCertificate",
    "all_lifts_inequality",
    "brute_force_lift",
    "check_wall_inequality",
    "closed_form_lift_gm3",
    "closed_form_lift_qds",
    "expected_dimension",
    "PicardLatticeReport",
    "orthogonal_primitive",
    "validate_lattice",
]
