"""Reflection factorizations of Coxeter elements in the complex reflection
groups G(d,1,n) and G(d,d,n): exact wreath-product arithmetic, the Hurwitz
braid action, lifting to the generic covers, canonical orbit representatives,
and a certificate-producing orbit engine."""

from .groups import (
    INF,
    GroupError,
    GroupParams,
    InfiniteOrderError,
    ParameterMismatchError,
    WreathElement,
    conjugate,
    element_order,
    identity,
    inverse,
    multiply,
    power,
    project,
    total_weight,
)
from .reflections import (
    ClassLabel,
    CoxeterNumberData,
    Reflection,
    class_label,
    classify,
    conjugacy_class_brute,
    coxeter_element,
    coxeter_number,
    diagonal_reflection,
    enumerate_reflections,
    transposition_reflection,
)
from .hurwitz import (
    BraidWord,
    Factorization,
    HurwitzError,
    Interval,
    apply_braid,
    apply_move,
    cable,
    factorization,
    invariant_multiset,
    lift_braid_through_cable,
    tuple_invariants_general,
)
from .lifting import (
    LengthCapError,
    LiftError,
    LiftResult,
    lift_factorization,
    lift_with_delta,
    reflection_length,
)
from .canonical import (
    CanonicalForm,
    CanonicalizationError,
    SearchBudgetError,
    canonical_projection,
    canonicalize_d1n,
    front_diagonals,
    pair_reduce_dihedral,
    push_diagonal_to_first_coordinate,
    zero_pairs,
)
from .orbits import (
    BudgetExceededError,
    NotConnectedError,
    OrbitReport,
    OrbitResult,
    enumerate_factorizations,
    orbit_bfs,
    same_orbit,
    verify_main_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
