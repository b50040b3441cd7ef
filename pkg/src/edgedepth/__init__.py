"""Exact depth classification for powers and symbolic powers of edge ideals.

The package decides, for a finite simple graph and an exponent t, whether
the quotient by the t-th (symbolic) power of the edge ideal has depth zero,
depth one, or depth at least two, entirely by combinatorial criteria, and
audits those criteria against an independent homological depth oracle.
"""

from .graphs import Graph
from .ears import mu_star, phi_star, s_invariant, s_invariant_or_none
from .ideals import MonomialIdeal, edge_ideal, power, symbolic_power_generators
from .complexes import SimplicialComplex, degree_complex, symbolic_degree_complex
from .homology import betti_numbers, depth_oracle, projective_dimension
from .engine import (
    Classification,
    DepthClass,
    DepthProfile,
    depth_profile,
    depth_zero,
    h1_nonzero,
    symbolic_depth_one,
)
from .criteria import TheoremCheck
from .catalog import (
    connected_catalog,
    decode_graph6,
    encode_graph6,
    ingest_catalog,
    parse_edgelist,
)

__all__ = [
    "Graph",
    "mu_star",
    "phi_star",
    "s_invariant",
    "s_invariant_or_none",
    "MonomialIdeal",
    "edge_ideal",
    "power",
    "symbolic_power_generators",
    "SimplicialComplex",
    "degree_complex",
    "symbolic_degree_complex",
    "betti_numbers",
    "depth_oracle",
    "projective_dimension",
    "Classification",
    "DepthClass",
    "DepthProfile",
    "depth_profile",
    "depth_zero",
    "h1_nonzero",
    "symbolic_depth_one",
    "TheoremCheck",
    "connected_catalog",
    "decode_graph6",
    "encode_graph6",
    "ingest_catalog",
    "parse_edgelist",
]

__version__ = "1.0.0"
