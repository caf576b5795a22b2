"""palette-kit: exact palette index and decomposition certificates for
small multigraphs."""

from .coloring import (
    ChromaticIndexResult,
    ClassLabel,
    EdgeColoring,
    PaletteSystem,
    chromatic_index,
    is_class1_regular,
    palettes_of,
)
from .decomposition import (
    ClauseReport,
    Decomposition2,
    Decomposition3,
    RegularDecomposition3,
    classify_cubic,
    decomposition2_to_json,
    decomposition3_to_json,
    decomposition_from_json,
    extract_decomposition_2,
    extract_decomposition_3,
    regular_corollary_check,
    synthesize_coloring_2,
    synthesize_coloring_3,
    verify_decomposition_2,
    verify_decomposition_3,
)
from .errors import (
    ImproperColoring,
    InvalidCertificate,
    LoopRejected,
    MalformedInput,
    NonMinimalColoring,
    NotConnected,
    NotCubic,
    NotRegular,
    NotTwoPalettes,
    PaletteKitError,
    ResourceLimit,
    TooManyPalettes,
)
from .formats import (
    decode_edge_list_json,
    decode_graph6,
    decode_sparse6,
    encode_edge_list_json,
    encode_graph6,
    encode_sparse6,
    parse_graph,
    read_graph_file,
)
from .hypergraphs import (
    HColoring,
    Hypergraph,
    associated_hypergraph,
    canonical_h_coloring,
    hypergraph_order_bounds,
    induced_coloring,
    pairwise_intersecting,
    verify_h_coloring,
)
from .multigraph import (
    EdgeSubset,
    MultiGraph,
    VertexPartition,
    connected_components,
    degree_profile,
    has_perfect_matching,
    has_spanning_even_subgraph_no_isolated,
    induced_edge_subgraph,
    is_connected,
    is_regular,
)
from .solver import (
    LowerBoundCheck,
    PaletteIndexResult,
    check_lower_bound_theorem,
    palette_index,
    palette_index_oracle,
    reduce_colors,
)

__version__ = "0.1.0"
