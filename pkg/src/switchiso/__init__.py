"""Signatures on small simple graphs, classified up to switching isomorphism.

A signature marks a subset of edges as negative. Switching at a vertex set
flips the sign of every edge leaving the set, and combining switchings with
graph automorphisms yields the switching-isomorphism relation this package
decides, enumerates and reports on. The showcase instance is the complete
graph on six vertices with its sixteen classes.
"""

from .classify import (
    CanonicalKey,
    ClassReport,
    IsoWitness,
    apply_automorphism,
    automorphic_type_count,
    automorphism_from_images,
    canonical_form,
    check_min_degree_bound,
    enumerate_isomorphism_classes,
    enumerate_switching_classes,
    frustration_index,
    is_switching_isomorphic,
)
from .errors import (
    DuplicateEdge,
    GraphMismatch,
    InvalidEdge,
    InvalidParam,
    InvalidVertex,
    NotAnEdge,
    NotAutomorphism,
    SwitchIsoError,
    TooLarge,
    UnknownGraph,
)
from .graphs import (
    Automorphism,
    Cycle,
    Graph,
    PermutationGroup,
    automorphism_group,
    build_graph,
    builtin_graph,
    enumerate_cycles,
    load_graph_file,
    parse_graph_text,
    spanning_forest,
)
from .kernels import backend_name
from .signatures import (
    CycleSpectrum,
    Gf2Basis,
    Signature,
    coset_reduce,
    cut_mask,
    cut_space_basis,
    cycle_sign,
    is_balanced,
    is_switching_equivalent,
    negative_cycle_spectrum,
    parse_signature,
    signature_from_string,
    switch,
    switching_witness,
    unbalanced_cycle_set,
    vertex_cut,
)

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "CanonicalKey",
    "ClassReport",
    "Cycle",
    "CycleSpectrum",
    "DuplicateEdge",
    "Gf2Basis",
    "Graph",
    "GraphMismatch",
    "InvalidEdge",
    "InvalidParam",
    "InvalidVertex",
    "IsoWitness",
    "NotAnEdge",
    "NotAutomorphism",
    "PermutationGroup",
    "Signature",
    "SwitchIsoError",
    "TooLarge",
    "UnknownGraph",
    "apply_automorphism",
    "automorphic_type_count",
    "automorphism_from_images",
    "automorphism_group",
    "backend_name",
    "build_graph",
    "builtin_graph",
    "canonical_form",
    "check_min_degree_bound",
    "coset_reduce",
    "cut_mask",
    "cut_space_basis",
    "cycle_sign",
    "enumerate_cycles",
    "enumerate_isomorphism_classes",
    "enumerate_switching_classes",
    "frustration_index",
    "is_balanced",
    "is_switching_equivalent",
    "is_switching_isomorphic",
    "load_graph_file",
    "negative_cycle_spectrum",
    "parse_graph_text",
    "parse_signature",
    "signature_from_string",
    "spanning_forest",
    "switch",
    "switching_witness",
    "unbalanced_cycle_set",
    "vertex_cut",
    "__version__",
]
