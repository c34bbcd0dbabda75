"""Short rainbow cycles in edge-coloured graphs.

Exact oracles for rainbow, plain and directed girth, the excess-subgraph
toolkit behind the ``4n/9 + 7`` bound for three-edge colour classes, the
constructive pipeline itself, instance generators and a randomized harness.
"""

from .errors import InvalidGraphError, PreconditionError, TheoremViolation
from .excess import chord_bound, chord_census, minimal_excess_subgraph, short_cycle_excess1, short_cycle_excess2
from .formats import FormatError, parse_cert, parse_dgr, parse_ecg, write_cert, write_dgr, write_ecg
from .graph import (
    CycleCertificate,
    Digraph,
    EdgeColouredGraph,
    Subgraph,
    Violation,
    colour_class,
    excess,
    is_rainbow_cycle,
    two_core,
    validate_certificate,
)
from .instances import (
    balanced_three_colouring,
    circulant_digraph,
    defect,
    from_digraph,
    psi_digraph,
    psi_graph,
    random_digraph,
    random_instance,
)
from .oracle import directed_girth, girth_exact, max_stable_set, rainbow_girth_exact
from .r3 import find_short_rainbow_cycle, prepare, solve
from .rng import SplitMix64

__version__ = "0.1.0"
