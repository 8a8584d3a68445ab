"""Workbench for directed-space topology on finite T0 spaces.

Finite posets and spaces, the interior- and directed-family approximation
relations, continuity-class predicates, lattice analyses, constructions
(products, exponentials, topological-ideal completion, adjunctions), a
gallery of countable counterexample spaces with decidable oracles, and
exhaustive small-instance theorem suites.
"""

from .errors import (
    BoundExceeded,
    ClaimFailed,
    CycleDetected,
    DtopwError,
    InvalidTopology,
    NotALattice,
    NotAnAdjunction,
    NotARetraction,
    NotDirected,
    NotDistributive,
    NotInFragment,
    NotMonotone,
    OracleUnavailable,
    ParseError,
    UnknownLabel,
    UnknownName,
    UnknownProperty,
)
from .order import (
    FinitePoset,
    MonotoneMap,
    antichain,
    chain,
    diamond,
    enumerate_posets,
    find_isomorphism,
    format_poset,
    is_isomorphic,
    parse_poset,
)
from .topology import (
    FiniteSpace,
    alexandroff,
    closed_lattice,
    enumerate_t0_topologies,
    find_homeomorphism,
    format_space,
    is_homeomorphic,
    open_lattice,
    parse_space,
    scott_topology,
    scott_topology_literal,
    sierpinski,
    upper_topology,
)
from .lattices import (
    FiniteLattice,
    coprimes,
    hyperbelow,
    hyperbelow_open,
    is_completely_distributive,
    is_distributive,
    is_hyperalgebraic,
    is_hypercontinuous,
    m3,
    primes,
    spectrum,
)
from .approximation import (
    ApproxReport,
    SpaceHandle,
    compact_elements,
    compact_open_is_hypercompact,
    continuity_predicates,
    d_approx,
    fin_approx,
    finite_handle,
    is_b_space,
    is_c_space,
    is_hypercompactly_based,
    is_locally_hypercompact,
    n_approx,
)
from .constructions import (
    GaloisConnection,
    TopologicalIdeal,
    cat_product,
    check_core_compact,
    eta_diamond,
    exponential,
    ideal_completion,
    lower_adjoint,
    product,
    retract_transfer,
    s_n_map,
    sup_map,
    tensor,
)
from .gallery import gallery_names, gallery_space, verify_gallery_claims
from .suites import SUITES, SuiteConfig, SuiteReport, run_suite

__version__ = "0.1.0"
