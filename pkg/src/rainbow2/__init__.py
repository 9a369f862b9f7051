"""Rainbow colourings of graphs with rainbow connection number 2.

A polynomial-time construction using at most five colours, plus the
verifier and exact brute-force oracles used to check it.
"""

from .algorithm import (ColoringTrace, ColorResult, appropriate_coloring,
                        color_bridgeless_diam2, color_radius1_pendant, color_rc2,
                        shortest_cycle_through)
from .errors import (BadCyclePattern, CompletionFailed, Disconnected, GenerationExhausted,
                     HasBridge, InstanceTooLarge, InvalidGraph, NoCycle, NotDiameter2,
                     NotPendantStructure, NotRc2Structure, PaletteTooLarge, ParseError,
                     RainbowError, UnknownName)
from .generators import GeneratorSpec, generate, named, petersen, validate_family
from .graph import (CenterMetrics, Graph, bridges, build_graph, center, edge_cut,
                    induced_subgraph, k_neighborhood, metrics)
from .verify import (EdgeColoring, RainbowCertificate, RainbowReach, Verdict, is_rainbow_connected,
                     lower_bound_diameter, rainbow_path, rainbow_path_bruteforce, rc_exact)

__version__ = "0.1.0"
