"""List coloring of graphs on surfaces, organised around the Heawood number.

Modules:

- ``genus``: exact H(eps), genus windows, Euler-formula bounds
- ``graph``, ``isomorphism``: bitset graphs, blocks, cliques, canonical forms
- ``embedding``: signed rotation systems, face tracing, Euler genus
- ``coloring``, ``choosability``: exact list coloring, greedy procedures, choosability search
- ``criticality``: critical-graph tests and edge-count bounds
- ``constructions``: named families and polygon edge identifications
- ``formats``, ``cli``: text formats and the command-line harness
- ``verify``, ``acceptance``: desk-scale verification drivers
"""

from .genus import heawood_number, genus_window
from .graph import Graph
from .coloring import ListAssignment, solve_list_coloring
from .embedding import RotationEmbedding, trace_faces, euler_genus

__all__ = ["heawood_number", "genus_window", "Graph", "ListAssignment", "solve_list_coloring",
           "RotationEmbedding", "trace_faces", "euler_genus"]
__version__ = "0.1.0"
