"""quivergrass: exact Euler characteristics of quiver Grassmannians.

Three mutually cross-validating routes: finite-field point counting with
verified polynomial interpolation, closed-form binomial formulas for the
Kronecker quiver, and the determinantal generalized-minor formula for
type-A Dynkin quivers.  All arithmetic is exact; no floating point.
"""

from .dynkin import (
    RootSystem,
    coxeter_from_orientation,
    dynkin_indecomposable,
    elementary_matrices_A,
    f_polynomial_via_minor,
    generalized_minor_A,
    orientation_from_coxeter,
    root_system,
    simple_reflection,
    solve_gamma,
    weyl_orbit,
)
from .errors import QuivergrassError
from .euler import (
    CountingPolynomial,
    counting_polynomial,
    euler_characteristic,
    f_polynomial,
    interpolate_counting_polynomial,
)
from .fpoly import FPolynomial, f_poly_multiply
from .kronecker import (
    INFINITY,
    KroneckerKind,
    binom_ext,
    build_kronecker,
    kronecker_chi,
    kronecker_quiver,
    ordinary_grassmannian_chi,
    preinjective,
    preprojective,
    regular,
)
from .model import (
    Quiver,
    Representation,
    SubspaceTuple,
    direct_sum,
    dual_representation,
    euler_form,
    ext1_dim,
    hom_dim,
    is_rigid,
    is_subrepresentation,
    load_representation,
    reduce_mod,
    save_representation,
    simple_representation,
    validate_representation,
    zero_representation,
)
from .sampler import (
    example4_quartic,
    example4_verify,
    positivity_scan,
    sample_general_rep,
    smoothness_probe,
)
from .subspaces import (
    PointCount,
    count_subreps,
    enumerate_subspaces,
    gaussian_binomial,
    iter_subrep_tuples,
)

__version__ = "0.1.0"

__all__ = [
    "CountingPolynomial",
    "FPolynomial",
    "INFINITY",
    "KroneckerKind",
    "PointCount",
    "Quiver",
    "QuivergrassError",
    "Representation",
    "RootSystem",
    "SubspaceTuple",
    "binom_ext",
    "build_kronecker",
    "count_subreps",
    "counting_polynomial",
    "coxeter_from_orientation",
    "direct_sum",
    "dual_representation",
    "dynkin_indecomposable",
    "elementary_matrices_A",
    "enumerate_subspaces",
    "euler_characteristic",
    "euler_form",
    "example4_quartic",
    "example4_verify",
    "ext1_dim",
    "f_poly_multiply",
    "f_polynomial",
    "f_polynomial_via_minor",
    "gaussian_binomial",
    "generalized_minor_A",
    "hom_dim",
    "interpolate_counting_polynomial",
    "is_rigid",
    "is_subrepresentation",
    "iter_subrep_tuples",
    "kronecker_chi",
    "kronecker_quiver",
    "load_representation",
    "ordinary_grassmannian_chi",
    "orientation_from_coxeter",
    "positivity_scan",
    "preinjective",
    "preprojective",
    "reduce_mod",
    "regular",
    "root_system",
    "sample_general_rep",
    "save_representation",
    "simple_reflection",
    "simple_representation",
    "smoothness_probe",
    "solve_gamma",
    "validate_representation",
    "weyl_orbit",
    "zero_representation",
]
