"""Exhaustive non-abelian cohomology of Hopf algebras over prime fields."""

from .catalog import Instance, axiom_suite, parse_instance
from .cohomology import (
    BoxSet,
    CocycleSet,
    CohomologyReport,
    PreCosimplicialAlgebras,
    VerificationReport,
    act,
    assemble_pair,
    biproduct_counts,
    build_box_set,
    build_C,
    build_Cstar,
    build_setting,
    build_T,
    coinvariants,
    compute_h0,
    compute_h1,
    compute_z1,
    split_pair,
    verify_decomposition,
    verify_exact_sequence,
)
from .errors import (
    BudgetExceeded,
    HopfCohError,
    IncompatiblePair,
    NoSuchRoot,
    NotAnAction,
    NotInvertible,
    NotPrime,
    ParseError,
    PrerequisiteFailed,
    ShapeMismatch,
)
from .group_cohom import (
    GroupCocycle,
    cross_check_hopf_vs_group,
    group_box_set,
    group_h0,
    group_h1,
    group_z1,
    verify_semidirect_decomposition,
)
from .hopf_core import AlgebraData, CheckReport, CoalgebraData, HopfData, check_hopf, grouplikes, units
from .linalg import DEFAULT_BUDGET, BasedSpace, Element, LinearMap
from .models import (
    FiniteGroup,
    GroupAction,
    cyclic_group,
    function_algebra,
    group_algebra,
    kA_in_yd,
    s3_data,
    semidirect,
    taft_algebra,
    taft_pair,
)
from .radford import BraidedHopfData, ComoduleAlgebraData, radford_product, self_coefficients, star_extension
from .scalars import PrimeField, make_prime_field, primitive_root_of_unity

__version__ = "0.1.0"
