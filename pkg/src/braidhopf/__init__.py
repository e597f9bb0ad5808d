"""Exact engine for Hopf-theoretic structures in braided categories of
finite-dimensional graded vector spaces with bicharacter braidings."""

__version__ = "0.1.0"

from .checks import Report
from .errors import (
    CompositionError,
    DegreeError,
    DslError,
    EngineError,
    FieldError,
    ScenarioError,
    ShapeError,
    SplitError,
    StructureError,
)
from .fields import ModInt, PrimeField, RationalField, root_of_unity
from .graded import (
    AbelianGroup,
    Bicharacter,
    BraidedContext,
    GradedMap,
    GradedSpace,
    SplitIdempotent,
    compose,
    split_idempotent,
    tensor,
)
from .structures import (
    ActionMap,
    Bimodule,
    Bicomodule,
    CoactionMap,
    HopfStructure,
    adjoint_action,
    antipode_properties,
    check_structure,
    mirror_opposites,
    pullback_bimodule,
    solve_antipode,
    tensor_product_structure,
)
