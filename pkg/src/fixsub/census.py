"""Exhaustive generation of small graphs up to isomorphism."""

from __future__ import annotations

import itertools
from typing import Iterator

from .graphs import Graph
from .groups import canonical_certificate


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def graphs_up_to_iso(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Classes are grown edge by edge from the empty graph; every graph is
    reached because deleting any edge gives a graph one level down.
    """
    empty = Graph.from_edges(n, ())
    level = {canonical_certificate(empty): empty}
    out = [empty]
    while level:
        nxt: dict = {}
        for G in level.values():
            for u, v in itertools.combinations(range(n), 2):
                if G.has_edge(u, v):
                    continue
                H = Graph.from_edges(n, G.edges + ((u, v),))
                cert = canonical_certificate(H)
                if cert not in nxt:
                    nxt[cert] = Graph.from_edges(n, cert[1])
        out.extend(nxt[c] for c in sorted(nxt))
        level = nxt
    return out


def connected_graphs_up_to_iso(n: int) -> list[Graph]:
    return [G for G in graphs_up_to_iso(n) if G.is_connected()]
