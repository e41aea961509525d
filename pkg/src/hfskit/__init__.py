"""Bijective arithmetic encodings of hereditarily finite sets, hypergraphs and digraphs."""

from .bitset import bit_elements, nat_to_set, set_to_nat
from .config import get_max_bits, max_bits, set_max_bits
from .errors import (
    CapExceededError,
    CycleError,
    DuplicateMemberError,
    EmptyMemberError,
    HfsError,
    HfsSyntaxError,
    IsolatedVertexError,
    NotAPairError,
    UrelementRangeError,
)
from .graphs import (
    Digraph,
    compress_dag,
    contains_dag,
    contains_edges,
    decorate,
    digraph_to_nat,
    member_dag,
    member_edges,
    nat_to_digraph,
    to_dot,
    transpose_nat,
)
from .hfs import (
    EMPTY,
    HSet,
    Urelement,
    hfs_to_nat,
    hypergraph_to_nat,
    nat_to_hfs,
    nat_to_hypergraph,
    parse_hfs,
    print_hfs,
)
from .kernels import BACKEND
from .ordinal import hfs_ordinal, nat_choice_fun, nat_ordinal, nat_powset
from .pairing import (
    SCHEMES,
    NatPair,
    bitmerge_pair,
    bitmerge_unpair,
    cantor_pair,
    cantor_unpair,
    kuratowski_pair,
    kuratowski_unpair,
)
from .streams import hfs_level_stream, hfs_stream, nat_stream, powerset
from .transport import (
    DEPTH,
    HSIZE,
    FoldAlgebra,
    hfold,
    lift_to_hfs,
    lift_to_nat,
    nat_adduction,
    nat_difference,
    nat_fold,
    nat_intersection,
    nat_size,
    nat_union,
)

__version__ = "0.1.0"
