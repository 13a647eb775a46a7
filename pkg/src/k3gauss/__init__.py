"""Exact positivity decisions on the Hilbert square of a K3 surface.

Nef, movable and ample tests for classes ``L - a*delta`` on S^[2], k-very
ampleness on the surface, and certificates for surjectivity of higher Gaussian
maps of K3 surfaces and their hyperplane sections.
"""

from .arith import PellSolution, isqrt, pell_general_min, pell_square_min, pell_unit_min
from .errors import (
    BoundNotMetError,
    DegenerateSquareError,
    InvalidInputError,
    K3GaussError,
    LatticeError,
    SearchCapExceeded,
)
from .gauss import (
    BoundCheck,
    GaussVerdict,
    curve_gauss_general,
    curve_gauss_rank1,
    gauss_surjective_k3,
    gounelas_ottem_bound,
    min_genus,
)
from .lattice import (
    Effectivity,
    Hilb2Class,
    PicLattice,
    classes_by_square,
    divisibility_two,
    dumps_lattice,
    enumerate_classes,
    is_ample_class,
    is_effective,
    loads_lattice,
    q_pair,
    q_self,
)
from .positivity import (
    Mode,
    PositivityVerdict,
    Status,
    h_minus_2delta_ample,
    h_minus_delta_ample,
    is_movable,
    is_positive,
    knutsen_k_very_ample,
    minus2_candidates,
    minus10_candidates,
    movable_highdeg,
    positive_highdeg,
    very_ample_mL_minus_delta,
)
from .rank1 import (
    ConeCase,
    ConeDescription,
    VanishingCertificate,
    gauss_surjective_rank1,
    nef_cone,
    p2_gauss_surjective,
    vanishing_certificate,
)

__version__ = "0.1.0"
