"""Exact anti-Ramsey numbers ``ar(K_{n1..nr}, K_k)`` with witnesses and a brute-force oracle."""

from .canon import canonical_form, colored_isomorphic, graph_canonical_form, graphs_isomorphic
from .constructions import (
    blow_up,
    book_colorings,
    example1_coloring,
    named_graph,
    normal_coloring,
    rainbow_plus_common,
    symmetrize,
    turan_coloring,
    turan_graph,
)
from .core import (
    ColorClassification,
    ColoredGraph,
    Graph,
    PartiteSpec,
    build_host,
    classify_colors,
    contains_rainbow_clique,
    rainbow_clique,
    saturated_color_degree,
    vertices_symmetric,
)
from .engine import BaseColoringScore, ar_via_theorem6, argmax_bases, weighted_color_count
from .errors import AntiRamseyError, CapacityError, ValidationError
from .formulas import (
    ArResult,
    ar_balanced,
    ar_complete,
    ar_kpartite,
    ar_multipartite_k3,
    dirac_extremal_bound,
    formula_for,
    turan_number,
)
from .io import read_colored, write_colored
from .oracle import (
    ExtremalFamily,
    brute_force_ar,
    classify_theorem8,
    dirac_extremal_graphs,
    enumerate_extremal,
    verify_theorem10,
)

__version__ = "0.1.0"
