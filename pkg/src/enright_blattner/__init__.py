"""Blattner's formula, generalized LR coefficients and Enright resolutions in type A."""

from .blattner import (
    BlattnerQuery,
    blattner_direct,
    blattner_hermitian,
    blattner_two_nc_stable,
    check_hs_hypothesis,
    hermitian_weight,
    q_count,
)
from .enright import (
    EpsilonTable,
    Resolution,
    ResolutionTerm,
    epsilon_extract,
    euler_character_check,
    resolution_of,
    stabilization_check,
)
from .exceptions import CapExceededError, OrderingHypothesisError, TruncationError, UnsupportedRankError
from .genlr import (
    HollowTable,
    gen_lr_coeff,
    gen_tensor_decompose,
    hermitian_blattner_as_genlr,
    rational_lr_coeff,
)
from .lr import cauchy_side, lr_coeff, schur_oracle, skew_decompose, tensor_decompose
from .partitions import Partition, RationalWeight, join, partitions_up_to, split
from .rootsys import (
    BlockStructure,
    CompactWeylElement,
    Root,
    compact_weyl_group,
    is_dominant,
    phi_m_split,
    positive_roots,
    rho,
    triple_decode,
    triple_encode,
)
from .series import (
    LaurentSeries,
    b0_series,
    b_delta_series,
    coefficient,
    delta_product,
    dominant_filter,
    geometric_inverse,
)

__version__ = "0.1.0"
