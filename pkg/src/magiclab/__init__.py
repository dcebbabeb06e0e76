"""Distance magic labelings of tetravalent graphs.

Library layout:

- graphs:    simple graphs, canonical forms, automorphisms
- labelings: the signed label model and all labeling predicates
- families:  wreath / circulant / cycle-product generators and wreath labelings
- quotients: quotient of a self-reverse labeling, lift, DOT export
- merges:    the cyclet merge construction and order witnesses
- search:    exhaustive enumeration and the classification table
- cli:       command-line front end
"""

from .graphs import (
    Graph,
    GraphError,
    are_isomorphic,
    automorphism_group,
    canonical_code,
    connected_components,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_edge_transitive,
    is_vertex_transitive,
    new_graph,
)
from .labelings import (
    LabelGraph,
    Labeling,
    LabelingError,
    PairPartition,
    are_equivalent,
    bipartition,
    is_alternating,
    is_balanced,
    is_degenerate,
    is_distance_magic,
    is_link,
    is_self_reverse,
    label_graph,
    label_graph_from_json,
    label_graph_to_json,
    label_set,
    labeling_from_json,
    labeling_to_json,
    pair_partition,
    partner,
    reverse,
    to_classical,
)
from .families import (
    cartesian_cycles,
    circulant,
    direct_cycles,
    wreath,
    wreath_degenerate_labeling,
    wreath_natural_labeling,
    wreath_non_sr_labeling,
    wreath_nondegenerate_labeling,
)
from .quotients import (
    QuotientError,
    QuotientGraph,
    export_dot,
    lift,
    quotient,
    quotient_from_json,
    quotient_to_json,
)
from .merges import (
    Cyclet,
    MergeError,
    MergeReport,
    align_cyclets,
    check_merge_conditions,
    cyclet_from_quotient_edge,
    extend_by_w4,
    make_cyclet,
    merge,
    merged_labeling,
    witness,
    witness_non_wreath,
    witness_nondegenerate,
)
from .search import (
    EnumerationReport,
    SearchOptions,
    enumerate_dm,
    enumerate_sr,
    find_labelings,
    iter_sr_pairs,
    table1_report,
)

__version__ = "0.1.0"
