"""Fixing subgraphs of finite graphs, applied to Hamiltonian cycles."""

from .graphs import Graph, GraphError, SpanningSubgraph
from .groups import PermutationGroup, automorphism_group, canonical_labeling, is_isomorphic
from .hamilton import HamCycle, enumerate_hamiltonian_cycles, is_hamiltonian
from .fixing import FixingReport, HamOrbitReport, fixing_report, in_F_HAM, in_Fstar_HAM

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "SpanningSubgraph",
    "PermutationGroup", "automorphism_group", "canonical_labeling", "is_isomorphic",
    "HamCycle", "enumerate_hamiltonian_cycles", "is_hamiltonian",
    "FixingReport", "HamOrbitReport", "fixing_report", "in_F_HAM", "in_Fstar_HAM",
]
