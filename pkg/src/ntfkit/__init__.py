"""Exact computations with square-free monomial ideals."""
from ._accel import backend
from .decomposition import (
    Decomposition,
    IrreducibleComponent,
    PrimeIdeal,
    alexander_dual,
    ass_witness_oracle,
    associated_primes,
    embedded_primes,
    in_symbolic_power,
    irreducible_decomposition,
    minimal_primes,
    prime_colon_witnesses,
    symbolic_power,
)
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    ExponentOverflowError,
    HypothesisError,
    InvalidIdealError,
    NtfkitError,
    ParseError,
)
from .graphs import (
    Graph,
    cover_ideal,
    cycle_graph,
    dominating_ideal,
    edge_ideal,
    neighborhood_ideal,
    path_graph,
    star_graph,
)
from .ideal import MonomialIdeal, format_ideal_file, intersect, parse_ideal_file, power
from .monomial import Mode, Monomial, VarContext
from .ntf import beta1, is_minimally_not_ntf, is_ntf_up_to

__version__ = "0.1.0"
