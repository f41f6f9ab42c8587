"""Exact computations for the fusion procedure in the symmetric group and the higher Capelli identities."""

from .exact import PoleError, RationalFunction, UniPoly
from .fusion import (
    fusion_limit,
    fusion_product,
    phi_lambda_mu,
    pole_order_bound,
    pole_order_phi,
    upsilon_limit,
    verify_local_identities,
    verify_shifted_product,
)
from .symgroup import GroupAlgebraElement, Permutation
from .tensormat import (
    e_lambda,
    e_lambda_poly,
    quantum_determinant,
    verify_projector_product,
    verify_rtt_evaluation,
    verify_vanishing,
)
from .ugl import UglElement, ugl_mul
from .weyl import WeylElement, c_lambda, capelli_product, ugl_to_weyl, verify_capelli_identity
from .young import YoungDiagram, character, dimension, phi_lambda, symmetrizers

__version__ = "0.1.0"
