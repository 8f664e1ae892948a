"""Componentwise linear algebra over tuples of vector spaces sharing one field.

The core calculus works on n-tuples (n >= 2) of vectors, matrices and linear
maps, operated on slotwise over exact rationals, prime fields Z_p or machine
reals.  On top sit two applications: Markov n-chains (lockstep finite-state
chains) and Leontief closed/open economic n-models with sign-relaxed
variants.
"""

from .errors import DomainError, NlaError, ParseError
from .fields import DEFAULT_REAL_TOLERANCE, FieldDescriptor, FieldValue
from .foundations import NFieldClass, NFieldSpec, nfield_classify, ngroup_order
from .polynomials import Polynomial, poly_gcd, rational_roots, squarefree_parts
from .nspace import (
    NDims,
    NSubset,
    NVector,
    NVectorSpace,
    count_same_dimension,
    is_n_basis,
    is_n_independent,
    same_n_dimension,
    span_membership,
)
from .nmatrix import (
    NMatrix,
    OrthoClass,
    OrthoVerdict,
    n_det,
    n_inverse,
    n_nullspace,
    n_rank,
    ortho_classify,
)
from .ntransform import (
    ComponentAssignment,
    MapKind,
    NLinearMap,
    apply,
    compose,
    from_basis_images,
    hom_dimension,
    invert,
    n_kernel,
    rank_nullity,
)
from .spectral import (
    DNPair,
    EigenReport,
    NPolynomial,
    ProjectionSet,
    cayley_hamilton_check,
    char_npoly,
    commutes_with_projections,
    dn_decompose,
    eigen,
    eigen_combinations,
    eigen_projections,
    is_invariant,
    is_n_diagonalizable,
    min_npoly,
    primary_decomposition,
)
from .inner import (
    adjoint,
    best_approximation,
    bessel_check,
    gram_schmidt,
    n_inner,
    n_norm_sq,
    operator_classify,
    orthogonal_complement,
    orthogonal_projection,
)
from .markov import (
    Convention,
    MarkovNChain,
    StateNVector,
    WalkKind,
    classify_states,
    evolve,
    is_independent_trial,
    is_n_regular,
    markov_new,
    power_via_spectral,
    random_walk,
    spectral_decompose,
    stationary_distribution,
)
from .leontief import (
    ConsumptionNMatrix,
    ExchangeNMatrix,
    closed_solve,
    max_min_scorer,
    open_solve,
    productivity,
    s_closed_solve,
    s_open_solve,
)
from .formats import emit, parse_file, parse_text

__all__ = [name for name in dir() if not name.startswith("_")]
