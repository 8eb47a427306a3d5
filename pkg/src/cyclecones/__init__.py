"""Exact arithmetic for special-cycle classes on orthogonal Shimura
varieties: q-expansions and Miller bases, Heegner-class coefficient
functionals and their Eisenstein identities, rational ray/cone geometry
with an exact LP core, and even-unimodular lattice combinatorics."""

from .classes import (
    ClassVector,
    FunctionalCombo,
    IdentityReport,
    coordinates,
    eisenstein_coefficient_identity,
    evaluate,
    heegner_class,
    heegner_from_primitive,
    limit_prefactor,
    omega_class,
    primitive_eisenstein_identity,
    primitive_heegner_class,
    weight_for_signature,
)
from .cones import (
    Cone,
    Ray,
    accumulation_cone_model,
    canonicalize,
    class_ray,
    convergence_scan,
    extremal_generators,
    extremal_rays,
    is_pointed,
    lp_feasible,
    member,
    omega_ray,
    pointedness_witness,
    ray_distance,
    span_dimension,
)
from .lattice import (
    EvenLattice,
    HalfIntegralMatrix,
    build_even_unimodular,
    common_component_family,
    gauss_reduce,
    inner,
    is_positive_definite,
    is_primitive,
    moment_matrix,
    norm_q,
    primitive_part,
    vector_of_norm,
)
from .numtheory import (
    Factorization,
    bernoulli,
    factorize,
    moebius,
    sigma,
    square_divisors,
    zeta_negative,
)
from .qseries import (
    MillerBasis,
    QSeries,
    delta,
    dim_mk,
    dump_miller_basis,
    eisenstein,
    linear_combine,
    load_miller_basis,
    miller_basis,
    multiply,
    power,
)

__version__ = "0.1.0"
