"""Slow, independent reference computations used only by the tests."""

import itertools
from collections import deque

from fixsub.graphs import Graph


def brute_automorphisms(G: Graph) -> set[tuple[int, ...]]:
    E = G.edge_set
    out = set()
    for p in itertools.permutations(range(G.n)):
        if all(tuple(sorted((p[u], p[v]))) in E for u, v in G.edges):
            out.add(p)
    return out


def brute_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    E = H.edge_set
    return any(
        all(tuple(sorted((p[u], p[v]))) in E for u, v in G.edges)
        for p in itertools.permutations(range(G.n))
    )


def naive_hamiltonian_cycles(G: Graph) -> set[frozenset]:
    """Plain DFS from vertex 0 with no pruning; cycles as sets of edges."""
    n = G.n
    out: set[frozenset] = set()
    if n < 3:
        return out

    def dfs(path, seen):
        if len(path) == n:
            if G.has_edge(path[-1], 0):
                out.add(frozenset(tuple(sorted(e)) for e in zip(path, path[1:] + [0])))
            return
        for w in G.neighbors[path[-1]]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                dfs(path, seen)
                path.pop()
                seen.discard(w)

    dfs([0], {0})
    return out


def girth_by_edge_removal(G: Graph) -> float:
    """Shortest cycle = min over edges uv of (distance u..v without uv) + 1."""
    best = float("inf")
    for a, b in G.edges:
        dist = {a: 0}
        q = deque([a])
        while q:
            x = q.popleft()
            for y in G.neighbors[x]:
                if (x, y) in ((a, b), (b, a)) or y in dist:
                    continue
                dist[y] = dist[x] + 1
                q.append(y)
        if b in dist:
            best = min(best, dist[b] + 1)
    return best


def longest_common_path_brute(c1, c2) -> int:
    """Longest run of consecutive c1-edges (along c1's order) that are also c2-edges."""
    n = len(c1.order)
    common = [tuple(sorted((c1.order[i], c1.order[(i + 1) % n]))) in c2.edges for i in range(n)]
    if all(common):
        return n
    best = run = 0
    for flag in common + common:
        run = run + 1 if flag else 0
        best = max(best, run)
    return min(best, n)
