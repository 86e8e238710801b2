"""Finite simple graphs on vertices 0..n-1, family constructors and I/O.

Adjacency is kept as one integer bitset per vertex; the edge list is sorted.
Graphs are immutable once built.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid constructor arguments or malformed graph input."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(sorted(seen)), tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(w for w in range(self.n) if self.adj[v] >> w & 1)
            for v in range(self.n)
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        full = (1 << self.n) - 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.neighbors[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image graph with vertex v renamed perm[v]."""
        p = tuple(perm)
        return Graph.from_edges(self.n, ((p[u], p[v]) for u, v in self.edges))

    def spanning(self, edges: Iterable[tuple[int, int]]) -> "SpanningSubgraph":
        return SpanningSubgraph(self, frozenset(_norm_edge(u, v) for u, v in edges))


@dataclass(frozen=True)
class SpanningSubgraph:
    """A subset of a host's edges, on the host's full vertex set."""

    host: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        extra = self.edges - self.host.edge_set
        if extra:
            raise GraphError(f"edges not in host: {sorted(extra)[:3]}")

    @property
    def n(self) -> int:
        return self.host.n

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_edges(self.host.n, self.edges)


# constructors ----------------------------------------------------------------


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"both parts must be non-empty, got ({a}, {b})")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def make_circulant(n: int, diffs: Iterable[int]) -> Graph:
    """i ~ j iff (i - j) mod n lies in the difference set; the set must be symmetric."""
    if n < 1:
        raise GraphError(f"circulant needs n >= 1, got {n}")
    D = {d % n for d in diffs}
    if 0 in D:
        raise GraphError("difference set contains 0")
    if any((-d) % n not in D for d in D):
        raise GraphError(f"difference set {sorted(D)} is not closed under negation mod {n}")
    return Graph.from_edges(
        n, {_norm_edge(i, (i + d) % n) for i in range(n) for d in D}
    )


def make_generalized_petersen(n: int, k: int) -> Graph:
    """G(n, k): rim a_i -> i, inner b_i -> n + i."""
    if n < 3:
        raise GraphError(f"G(n,k) needs n >= 3, got n={n}")
    if not (1 <= k and 2 * k < n):
        raise GraphError(f"G(n,k) needs 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def make_lcf(n: int, chords: list[int]) -> Graph:
    """Hamiltonian cycle 0..n-1 plus chord i -- i + chords[i mod len] for each i."""
    if n < 3 or n % 2:
        raise GraphError(f"LCF notation needs an even n >= 4, got {n}")
    if not chords or n % len(chords):
        raise GraphError(f"chord list length {len(chords)} must divide n={n}")
    edges = {_norm_edge(i, (i + 1) % n) for i in range(n)}
    deg = [2] * n
    for i in range(n):
        j = (i + chords[i % len(chords)]) % n
        if j == i:
            raise GraphError(f"zero chord at vertex {i}")
        e = _norm_edge(i, j)
        if e in edges:
            # the partner vertex already added this chord from its own side
            if (j - i) % n in (1, n - 1):
                raise GraphError(f"chord {e} duplicates a cycle edge")
            continue
        edges.add(e)
        deg[i] += 1
        deg[j] += 1
        if deg[i] > 3 or deg[j] > 3:
            raise GraphError(f"chord {e} pushes a vertex past degree 3")
    if any(d != 3 for d in deg):
        raise GraphError("LCF chords do not give a cubic graph")
    return Graph.from_edges(n, edges)


def heawood() -> Graph:
    """Heawood graph as LCF [5,-5]^7; 0..13 in order is a Hamiltonian cycle."""
    return make_lcf(14, [5, -5])


def tutte_8cage() -> Graph:
    """Tutte-Coxeter graph as LCF [-13,-9,7,-7,9,13]^5."""
    return make_lcf(30, [-13, -9, 7, -7, 9, 13])


def dodecahedron() -> Graph:
    return make_lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4])


def line_graph(G: Graph) -> Graph:
    edges = G.edges
    index = {e: i for i, e in enumerate(edges)}
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    out = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                out.add(_norm_edge(ids[a], ids[b]))
    return Graph.from_edges(len(edges), out)


def girth(G: Graph) -> float:
    """Length of a shortest cycle; math.inf for forests."""
    best = math.inf
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# graph6 ----------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 encoder supports n <= 258047, got {n}")


def encode_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(G.n) + body


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise GraphError("graph6 string contains characters outside 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise GraphError("graph6 8-byte size header (n > 258047) not supported")
        if len(vals) < 4:
            raise GraphError("truncated graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# plain edge list -------------------------------------------------------------


def encode_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def decode_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"edge list declares {m} edges but has {len(pairs)}")
    return Graph.from_edges(n, pairs)


def read_graph(text: str) -> Graph:
    """Accept either graph6 or the 'n m' edge-list format."""
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if len(first.split()) == 2:
        return decode_edgelist(stripped)
    return decode_graph6(stripped)
