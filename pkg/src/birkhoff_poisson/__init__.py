"""Poisson geometry of compact symmetric spaces as computable linear algebra.

Triangular and Iwasawa factorizations of complex unimodular matrices, the
homogeneous Poisson bivector on Grassmannians / projective spaces / compact
groups, Birkhoff-layer stratification, the momentum map of the layer-torus
action, and explicit chart tensors with cross-verification between the
equivariant and coordinate descriptions.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionGuard,
    InvalidTangent,
    NotPositiveDefinite,
    NumericalDomainError,
    OnDegeneracyLocus,
    SingularInput,
    StratumAmbiguous,
    SymmetryViolation,
)
from .linalg import (
    BirkhoffFactors,
    IwasawaFactors,
    birkhoff_factor,
    inv_sqrt_hpd,
    iwasawa_factor,
    polar_factor,
    principal_minors,
)
from .lie import (
    TriangularContext,
    dressing_act,
    hilbert_transform,
    proj_u,
    trace_form,
    tri_project,
)
from .momentum import (
    MomentumValue,
    hamiltonian_residual,
    moment_eval,
    moment_on_basis,
    torus_vector_field,
)
from .poisson import (
    BivectorOperator,
    CoordBivector,
    calibration_constant,
    chart_pi_eval,
    coordinate_bivector,
    cp1_family,
    cp2_symplectic,
    cpn_coeffs,
    fothlu_w_chart,
    grassmann_local_pi,
    jacobi_residual,
    omega_apply,
    pi_el_group,
    pi_eval,
    pi_lw_group,
    pi_rank,
    su2_el_coefficients,
    su2_lw_coefficients,
)
from .strata import (
    LeafFactorization,
    birkhoff_layer,
    leaf_factorize,
    order_two_torus_elements,
    torus_tw,
)
from .symspace import (
    SymmetricSpacePreset,
    TangentClass,
    canonical_rep,
    cartan_embed,
    grassmannian,
    group_case,
    group_iso,
    parse_preset,
    project_ip,
    projective_space,
    theta_g,
)
