"""Potential-based tools for 4-critical graphs: colouring, short-cycle packings,
Ore-compositions, critical extensions, discharging and a verification harness."""
from __future__ import annotations

from .coloring import critical_subgraph, is_4_critical, k_colorable
from .config import Config
from .graph import Graph, GraphError, construct_named
from .graph6 import decode, encode
from .ore import enumerate_4_ore, is_4_ore, ore_compose
from .potential import classify_exceptional, potential, t_number, t_value

__all__ = [
    "Config",
    "Graph",
    "GraphError",
    "classify_exceptional",
    "construct_named",
    "critical_subgraph",
    "decode",
    "encode",
    "enumerate_4_ore",
    "is_4_critical",
    "is_4_ore",
    "k_colorable",
    "ore_compose",
    "potential",
    "t_number",
    "t_value",
]
