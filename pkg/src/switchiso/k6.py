"""Reference classification data for the complete graph on six vertices.

Nineteen small signatures, one per automorphic type of at most six
negative edges with maximum negative degree two, labeled sigma0 through
sigma18 in that order. They cover all sixteen switching-isomorphism
classes of the graph; three pairs fall together, and explicit switching
witnesses are recorded for those. The spectra of negative 3-, 4- and
5-cycles separate the sixteen classes, so the triples double as class
fingerprints. The reproduce command checks the package against this data.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, builtin_graph
from .signatures import Signature, parse_signature

REFERENCE_EDGE_SETS: dict[str, tuple[tuple[int, int], ...]] = {
    "sigma0": (),
    "sigma1": ((0, 1),),
    "sigma2": ((0, 1), (1, 2)),
    "sigma3": ((0, 1), (2, 3)),
    "sigma4": ((0, 1), (1, 2), (2, 3)),
    "sigma5": ((0, 1), (1, 2), (3, 4)),
    "sigma6": ((0, 1), (2, 5), (3, 4)),
    "sigma7": ((0, 1), (1, 2), (0, 2)),
    "sigma8": ((0, 1), (1, 2), (2, 3), (3, 4)),
    "sigma9": ((0, 1), (1, 2), (2, 3), (4, 5)),
    "sigma10": ((0, 1), (0, 5), (2, 3), (3, 4)),
    "sigma11": ((0, 1), (1, 2), (0, 2), (4, 5)),
    "sigma12": ((0, 1), (1, 2), (2, 5), (0, 5)),
    "sigma13": ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)),
    "sigma14": ((0, 1), (1, 2), (2, 3), (0, 3), (4, 5)),
    "sigma15": ((0, 1), (1, 2), (0, 2), (3, 5), (4, 5)),
    "sigma16": ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
    "sigma17": ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)),
    "sigma18": ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)),
}

# (negative 3-cycles, 4-cycles, 5-cycles) per class representative
CLASS_SPECTRA: dict[str, tuple[int, int, int]] = {
    "sigma0": (0, 0, 0),
    "sigma1": (4, 12, 24),
    "sigma2": (6, 18, 36),
    "sigma3": (8, 20, 32),
    "sigma4": (8, 24, 40),
    "sigma5": (10, 22, 36),
    "sigma6": (12, 24, 24),
    "sigma7": (10, 18, 36),
    "sigma8": (10, 26, 36),
    "sigma9": (12, 24, 32),
    "sigma10": (12, 20, 40),
    "sigma11": (14, 18, 36),
    "sigma12": (8, 24, 48),
    "sigma15": (16, 12, 48),
    "sigma16": (10, 30, 36),
    "sigma18": (20, 0, 72),
}

# the three duplicated types and the class label each one falls into
EQUIVALENT_LABEL: dict[str, str] = {
    "sigma13": "sigma9",
    "sigma14": "sigma10",
    "sigma17": "sigma6",
}

# (label, switch set, label of an automorphic image of the result)
SWITCH_WITNESSES: tuple[tuple[str, frozenset[int], str], ...] = (
    ("sigma6", frozenset({1, 2, 3}), "sigma17"),
    ("sigma10", frozenset({0, 2, 4}), "sigma14"),
    ("sigma13", frozenset({1, 3, 5}), "sigma9"),
)

# automorphic types of k negative edges with maximum degree two, k = 0..6
TYPE_COUNTS_MAX_DEG_TWO: tuple[int, ...] = (1, 1, 2, 4, 5, 4, 2)

# switching-isomorphism class counts of the builtin showcase graphs
CLASS_COUNTS: dict[str, int] = {
    "complete:3": 2,
    "complete:4": 3,
    "complete:5": 7,
    "complete:6": 16,
    "petersen": 6,
}

# every class of the six-vertex complete graph has frustration at most six
# and a minimum representative of maximum negative degree at most two
MAX_FRUSTRATION: int = 6
MIN_REP_DEGREE_BOUND: int = 2


@lru_cache(maxsize=1)
def k6() -> Graph:
    return builtin_graph("complete", 6)


def reference_signatures() -> dict[str, Signature]:
    """The nineteen labeled signatures as Signature objects, in label order."""
    g = k6()
    return {
        label: parse_signature(g, pairs)
        for label, pairs in REFERENCE_EDGE_SETS.items()
    }


def expected_triple(label: str) -> tuple[int, int, int]:
    """Class fingerprint for any of the nineteen labels, resolving the
    three duplicated types to their class label."""
    return CLASS_SPECTRA[EQUIVALENT_LABEL.get(label, label)]
