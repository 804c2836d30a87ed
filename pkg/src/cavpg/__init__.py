"""Contact B0-VPG recognition for circular-arc graphs.

Given a circular-arc graph, either lay it out with horizontal and vertical
grid segments that touch exactly along its edges, or point to a forbidden
induced subgraph.
"""

from .families import Certificate, Family, K4Chain, check_certificate
from .graph import Graph, parse_graph
from .recognize import RecognitionResult, recognize
from .representation import Representation, Segment
from .verify import verify_representation

__all__ = [
    "Certificate",
    "Family",
    "Graph",
    "K4Chain",
    "RecognitionResult",
    "Representation",
    "Segment",
    "check_certificate",
    "parse_graph",
    "recognize",
    "verify_representation",
]
