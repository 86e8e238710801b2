"""Exact enumeration of Hamiltonian cycles and longest-common-path statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Edge, Graph, GraphError
from .groups import Perm


def _canonical_order(order: Sequence[int]) -> tuple[int, ...]:
    n = len(order)
    i = min(range(n), key=order.__getitem__)
    fwd = tuple(order[(i + j) % n] for j in range(n))
    if n > 2 and fwd[1] > fwd[-1]:
        fwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd


@dataclass(frozen=True)
class HamCycle:
    """A spanning cycle, canonically rotated so order[0] is minimal and order[1] < order[-1]."""

    order: tuple[int, ...]
    host: Graph | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_order(cls, order: Sequence[int], host: Graph | None = None) -> "HamCycle":
        c = cls(_canonical_order(order), host)
        if host is not None:
            c.validate(host)
        return c

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], n: int, host: Graph | None = None) -> "HamCycle":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        if any(len(x) != 2 for x in nbrs):
            raise GraphError("edge set is not 2-regular")
        order = [0, min(nbrs[0])]
        while len(order) < n:
            a, b = nbrs[order[-1]]
            nxt = a if a != order[-2] else b
            if nxt == 0:
                raise GraphError("edge set is not a single spanning cycle")
            order.append(nxt)
        return cls.from_order(order, host)

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        o, n = self.order, len(self.order)
        return frozenset(
            (o[i], o[(i + 1) % n]) if o[i] < o[(i + 1) % n] else (o[(i + 1) % n], o[i])
            for i in range(n)
        )

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def validate(self, host: Graph) -> None:
        if sorted(self.order) != list(range(host.n)):
            raise GraphError("cycle does not visit every host vertex exactly once")
        if not self.edges <= host.edge_set:
            raise GraphError("cycle uses a non-edge of the host")

    def image(self, p: Perm) -> "HamCycle":
        return HamCycle(_canonical_order([p[v] for v in self.order]), self.host)

    def __str__(self) -> str:
        return " ".join(map(str, self.order))


def parse_cycle(text: str, host: Graph | None = None) -> HamCycle:
    return HamCycle.from_order([int(t) for t in text.split()], host)


def _connected_within(adj: tuple[int, ...], mask: int) -> bool:
    if not mask:
        return True
    low = mask & -mask
    seen = frontier = low
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _search(G: Graph, check_every: int, first_only: bool) -> list[tuple[int, ...]]:
    n = G.n
    adj = G.adj
    nbrs = G.neighbors
    found: list[tuple[int, ...]] = []
    if n < 3 or any(a.bit_count() < 2 for a in adj) or not G.is_connected():
        return found
    path = [0]
    start_bit = 1
    # vertices still to be placed on the path
    unvisited = ((1 << n) - 1) & ~1

    def extend(depth: int) -> bool:
        nonlocal unvisited
        head = path[-1]
        if not unvisited:
            if adj[head] & start_bit and path[1] < path[-1]:
                found.append(tuple(path))
                return first_only
            return False
        for w in nbrs[head]:
            wb = 1 << w
            if not unvisited & wb:
                continue
            unvisited ^= wb
            ok = True
            if unvisited:
                avail = unvisited | wb | start_bit
                # the start must still have a free neighbour to close on
                if not adj[0] & (unvisited | wb):
                    ok = False
                # neighbours of the old head lost an option; each needs two
                if ok:
                    for u in nbrs[head]:
                        if unvisited >> u & 1 and (adj[u] & avail).bit_count() < 2:
                            ok = False
                            break
                if ok and check_every and depth % check_every == 0:
                    ok = _connected_within(adj, avail)
            elif not adj[w] & start_bit:
                ok = False
            if ok:
                path.append(w)
                if extend(depth + 1):
                    return True
                path.pop()
            unvisited ^= wb
        return False

    extend(1)
    return found


def enumerate_hamiltonian_cycles(G: Graph, check_every: int = 1) -> list[HamCycle]:
    """Every Hamiltonian cycle of G exactly once, sorted by canonical vertex order.

    ``check_every`` sets how often (in path depth) the remaining vertices are
    tested for connectivity; 0 disables the test. It only affects speed.
    """
    orders = _search(G, check_every, first_only=False)
    return [HamCycle(o, G) for o in sorted({_canonical_order(o) for o in orders})]


def is_hamiltonian(G: Graph) -> bool:
    return bool(_search(G, 1, first_only=True))


def count_hamiltonian_cycles(G: Graph) -> int:
    return len(enumerate_hamiltonian_cycles(G))


def longest_common_path(C1: HamCycle, C2: HamCycle) -> int:
    """Edges in a longest path lying in both cycles; n when the cycles coincide."""
    if C1.n != C2.n:
        raise GraphError(f"cycles on {C1.n} and {C2.n} vertices")
    if C1.host is not None and C2.host is not None and C1.host != C2.host:
        raise GraphError("cycles live in different host graphs")
    common = C1.edges & C2.edges
    if len(common) == C1.n:
        return C1.n
    nbrs: dict[int, list[int]] = {}
    for u, v in common:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    # the common part is a union of vertex-disjoint paths; walk each from an end
    best = 0
    seen: set[int] = set()
    for s, ns in nbrs.items():
        if len(ns) != 1 or s in seen:
            continue
        prev, cur, length = s, ns[0], 1
        seen.add(s)
        while len(nbrs[cur]) == 2:
            a, b = nbrs[cur]
            prev, cur = cur, (a if a != prev else b)
            length += 1
        seen.add(cur)
        best = max(best, length)
    return best


def p_distribution(G: Graph, C: HamCycle, cycles: list[HamCycle] | None = None) -> dict[int, int]:
    """Histogram of longest_common_path(C0, C) over all Hamiltonian cycles C0 of G."""
    if cycles is None:
        cycles = enumerate_hamiltonian_cycles(G)
    hist = Counter(longest_common_path(C0, C) for C0 in cycles)
    return dict(sorted(hist.items()))
