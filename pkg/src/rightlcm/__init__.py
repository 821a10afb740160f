"""Exact computational algebra for right LCM semigroup dynamics.

The package realizes, at desk scale and with exact arithmetic: right LCM
semigroup families, group actions by injective endomorphisms with coset
transversals and factorization solvers, the semidirect product and its
constructible-ideal calculus, the canonical-monomial *-algebra, the
partial-injection model of the left regular representation, fibred
product systems with a Fock action and covariance verifiers, and
morphism/admissibility checks.  Every operation is paired with a
brute-force oracle in the test suite.
"""

from ._backend import kernels
from .dynamics import (
    DynamicalSystem,
    GaussMultSystem,
    IntMultSystem,
    ResidueMultSystem,
    ShiftSystem,
    TrivialSystem,
)
from .errors import (
    ContractError,
    ParseError,
    RegistrationError,
    StructuralError,
    TruncationRequired,
)
from .groups import (
    GaussianGroup,
    Group,
    GrpElement,
    IntGroup,
    ResidueGroup,
    ShiftGroup,
    TrivialGroup,
)
from .monomials import (
    ZERO,
    AlgebraElement,
    Monomial,
    adjoint,
    algebra_add,
    algebra_adjoint,
    algebra_mult,
    algebra_scale,
    canonicalize,
    identity_monomial,
    monomial,
    projection,
    projection_product,
    mult,
)
from .product_system import (
    FibreVector,
    FockVector,
    GroupAlgebraElement,
    ProductSystem,
    RankOne,
)
from .regular import (
    PartialInjection,
    as_partial_map,
    check_li_relations,
    compose,
    equal_on_window,
    evaluate,
)
from .sampling import SampleSpec
from .scalars import ONE, RationalComplex
from .semidirect import EMPTY_IDEAL, PrincipalIdeal, SdElement, SemidirectProduct
from .semigroups import (
    DISJOINT,
    FreeAbelianMonoid,
    FreeMonoid,
    GaussianIntMonoid,
    Meet,
    Semigroup,
    SgElement,
    SignedIntMonoid,
)

__version__ = "0.1.0"
