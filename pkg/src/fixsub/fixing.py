"""Subgraph counts s, similarity counts s0, extension counts x, and fixing predicates.

Counts are computed two ways where feasible: through group orders
(|A(U)| s = |A(G)| x, s0 = |A(G)| / |A(U) & A(G)|) and by brute force over
vertex permutations, which serves as the independent check for small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Union

from . import groups
from .graphs import Edge, Graph, GraphError, SpanningSubgraph, girth
from .groups import PermutationGroup, automorphism_group, cycle_group, image_edges
from .hamilton import HamCycle, enumerate_hamiltonian_cycles

SubgraphLike = Union[Graph, SpanningSubgraph, HamCycle]

BRUTE_FORCE_MAX_N = 8


class RegimeExceeded(ValueError):
    """The requested exact computation is outside its supported size regime."""


class IntegralityError(ArithmeticError):
    """|A(U)| s / |A(G)| was not an integer; some upstream count is wrong."""


def as_graph(U: SubgraphLike) -> Graph:
    if isinstance(U, Graph):
        return U
    if isinstance(U, SpanningSubgraph):
        return U.graph
    if isinstance(U, HamCycle):
        return U.graph
    raise TypeError(f"cannot treat {type(U).__name__} as a spanning subgraph")


def _check_same_order(U: Graph, G: Graph) -> None:
    if U.n != G.n:
        raise GraphError(f"U has {U.n} vertices but G has {G.n}; U must be spanning")


def _is_spanning_cycle(U: Graph) -> bool:
    return U.n >= 3 and U.m == U.n and U.is_regular(2) and U.is_connected()


def _pair_index(n: int) -> list[list[int]]:
    idx = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[i][j] = idx[j][i] = 1 << k
            k += 1
    return idx


def _mask(edges, idx) -> int:
    m = 0
    for u, v in edges:
        m |= idx[u][v]
    return m


# counting ----------------------------------------------------------------------


def _embedding_images(U: Graph, G: Graph) -> set[frozenset[Edge]]:
    """Distinct edge sets p(E(U)) contained in E(G), over injective vertex maps p."""
    active = [v for v in range(U.n) if U.degree(v)]
    # order active vertices so each (after the first of its component) has an earlier neighbour
    order: list[int] = []
    placed: set[int] = set()
    for s in sorted(active, key=lambda v: -U.degree(v)):
        if s in placed:
            continue
        stack = [s]
        while stack:
            v = stack.pop()
            if v in placed:
                continue
            placed.add(v)
            order.append(v)
            stack.extend(w for w in reversed(U.neighbors[v]) if w not in placed)
    back = {v: [w for w in U.neighbors[v] if w in order[: i]] for i, v in enumerate(order)}
    images: set[frozenset[Edge]] = set()
    mapping: dict[int, int] = {}
    used = [False] * G.n

    def rec(i: int) -> None:
        if i == len(order):
            images.add(frozenset(
                (mapping[u], mapping[v]) if mapping[u] < mapping[v] else (mapping[v], mapping[u])
                for u, v in U.edges
            ))
            return
        v = order[i]
        for x in range(G.n):
            if used[x] or G.degree(x) < U.degree(v):
                continue
            if all(G.has_edge(x, mapping[w]) for w in back[v]):
                used[x] = True
                mapping[v] = x
                rec(i + 1)
                used[x] = False
        mapping.pop(v, None)

    rec(0)
    return images


def spanning_subgraph_count(U: SubgraphLike, G: Graph) -> int:
    """s(U; G): spanning subgraphs of G isomorphic to U.

    Spanning cycles go through Hamiltonian enumeration; anything else is an
    embedding search restricted to n <= 8.
    """
    Ug = as_graph(U)
    _check_same_order(Ug, G)
    if _is_spanning_cycle(Ug):
        return len(enumerate_hamiltonian_cycles(G))
    if G.n > BRUTE_FORCE_MAX_N:
        raise RegimeExceeded(f"general subgraph counting needs n <= {BRUTE_FORCE_MAX_N}, got {G.n}")
    return len(_embedding_images(Ug, G))


def spanning_count_direct(U: SubgraphLike, G: Graph) -> int:
    """s(U; G) by scanning all n! relabelings of U and keeping distinct images inside G."""
    Ug = as_graph(U)
    _check_same_order(Ug, G)
    n = G.n
    if n > BRUTE_FORCE_MAX_N:
        raise RegimeExceeded(f"permutation scan needs n <= {BRUTE_FORCE_MAX_N}, got {n}")
    idx = _pair_index(n)
    gmask = _mask(G.edges, idx)
    seen = set()
    for p in itertools.permutations(range(n)):
        m = 0
        for u, v in Ug.edges:
            m |= idx[p[u]][p[v]]
        if m & ~gmask == 0:
            seen.add(m)
    return len(seen)


def extension_count_direct(U: SubgraphLike, G: Graph) -> int:
    """x(U; G) by search: distinct edge sets X with E(U) <= X and X isomorphic to G.

    For n <= 8 every relabeling of G is scanned. A spanning cycle in a cubic G
    is handled at any size by completing the cycle with perfect matchings of
    chords, pruned by G's girth.
    """
    Ug = as_graph(U)
    _check_same_order(Ug, G)
    n = G.n
    if n <= BRUTE_FORCE_MAX_N:
        idx = _pair_index(n)
        umask = _mask(Ug.edges, idx)
        seen = set()
        for p in itertools.permutations(range(n)):
            m = 0
            for u, v in G.edges:
                m |= idx[p[u]][p[v]]
            if umask & ~m == 0:
                seen.add(m)
        return len(seen)
    if _is_spanning_cycle(Ug) and G.is_regular(3):
        return len(cubic_cycle_completions(Ug, G))
    raise RegimeExceeded(
        f"direct extension search needs n <= {BRUTE_FORCE_MAX_N} or a spanning cycle in a cubic graph"
    )


def cubic_cycle_completions(C: Graph, G: Graph) -> list[frozenset[Edge]]:
    """All chord matchings M with C + M isomorphic to the cubic graph G."""
    n = C.n
    g = girth(G)
    target = groups.canonical_certificate(G)
    adj = [set(C.neighbors[v]) for v in range(n)]
    out: list[frozenset[Edge]] = []

    def short_cycle_through(u: int, v: int) -> bool:
        # is there a u-v path of fewer than g-1 edges (so adding uv makes a cycle < g)?
        limit = g - 2
        frontier, seen = {u}, {u}
        for _ in range(int(min(limit, n))):
            nxt = set()
            for x in frontier:
                for y in adj[x]:
                    if y == v:
                        return True
                    if y not in seen:
                        seen.add(y)
                        nxt.add(y)
            frontier = nxt
        return False

    chords: list[Edge] = []

    def rec() -> None:
        free = [v for v in range(n) if len(adj[v]) < 3]
        if not free:
            X = Graph.from_edges(n, C.edge_set | set(chords))
            if groups.canonical_certificate(X) == target:
                out.append(frozenset(X.edges))
            return
        u = free[0]
        for v in free[1:]:
            if v in adj[u] or short_cycle_through(u, v):
                continue
            adj[u].add(v)
            adj[v].add(u)
            chords.append((u, v))
            rec()
            chords.pop()
            adj[u].discard(v)
            adj[v].discard(u)

    rec()
    return sorted(out, key=sorted)


def similarity_count(U: SubgraphLike, G: Graph, A: PermutationGroup | None = None) -> int:
    """s0(U; G) = |A(G)| / |A(U) & A(G)| (the orbit size of U under A(G))."""
    Ug = as_graph(U)
    _check_same_order(Ug, G)
    A = automorphism_group(G) if A is None else A
    return A.order // groups.subgraph_stabilizer_order(A, Ug.edges)


def extension_count(U: SubgraphLike, G: Graph, s: int | None = None) -> int:
    """x(U; G) = |A(U)| s(U; G) / |A(G)|, with a hard integrality check."""
    Ug = as_graph(U)
    _check_same_order(Ug, G)
    if s is None:
        s = spanning_subgraph_count(Ug, G)
    num = automorphism_group(Ug).order * s
    den = automorphism_group(G).order
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"|A(U)| s / |A(G)| = {num}/{den} is not an integer")
    return q


# reports -----------------------------------------------------------------------


@dataclass(frozen=True)
class FixingReport:
    s: int
    s0: int
    x: int
    aut_G: int
    aut_U: int
    stab: int
    fixing: bool
    strong_fixing: bool
    graph: str = ""

    def to_json(self) -> dict:
        return {
            "graph": self.graph, "s": self.s, "s0": self.s0, "x": self.x,
            "autG": self.aut_G, "autU": self.aut_U, "stab": self.stab,
            "fixing": self.fixing, "strongFixing": self.strong_fixing,
        }


def fixing_report(U: SubgraphLike, G: Graph) -> FixingReport:
    from .graphs import encode_graph6

    Ug = as_graph(U)
    _check_same_order(Ug, G)
    if not Ug.edge_set <= G.edge_set:
        raise GraphError("U is not a subgraph of G")
    A = automorphism_group(G)
    aut_U = automorphism_group(Ug).order
    stab = groups.subgraph_stabilizer_order(A, Ug.edges)
    s = spanning_subgraph_count(Ug, G)
    s0 = A.order // stab
    x = extension_count(Ug, G, s=s)
    fixing = s == s0
    return FixingReport(
        s=s, s0=s0, x=x, aut_G=A.order, aut_U=aut_U, stab=stab,
        fixing=fixing, strong_fixing=fixing and stab == aut_U,
        graph=encode_graph6(G),
    )


@dataclass(frozen=True)
class HamOrbit:
    size: int
    stab: int
    representative: HamCycle
    members: tuple[HamCycle, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class HamOrbitReport:
    cycle_count: int
    aut_G: int
    orbits: tuple[HamOrbit, ...]
    in_F_HAM: bool
    in_Fstar_HAM: bool

    def to_json(self, signature: Callable[[HamOrbit], str] | None = None) -> dict:
        sig = signature or (lambda o: str(o.representative))
        return {
            "cycles": self.cycle_count,
            "autG": self.aut_G,
            "orbits": [{"size": o.size, "stab": o.stab, "signature": sig(o)} for o in self.orbits],
            "fHam": self.in_F_HAM,
            "fStarHam": self.in_Fstar_HAM,
        }


def ham_orbits(G: Graph, cycles: list[HamCycle], A: PermutationGroup) -> list[HamOrbit]:
    """Split the Hamiltonian cycles of G into A(G)-orbits (in order of first member)."""
    by_edges = {c.edges: c for c in cycles}
    assigned: set[frozenset[Edge]] = set()
    orbits = []
    for c in cycles:
        if c.edges in assigned:
            continue
        images: set[frozenset[Edge]] = set()
        stab = 0
        for p in A.all_elements():
            img = image_edges(p, c.edges)
            images.add(img)
            if img == c.edges:
                stab += 1
        missing = images - by_edges.keys()
        if missing:
            raise AssertionError("an automorphism mapped a Hamiltonian cycle outside the cycle list")
        assigned |= images
        members = tuple(sorted((by_edges[e] for e in images), key=lambda h: h.order))
        orbits.append(HamOrbit(len(images), stab, c, members))
    return orbits


def ham_orbit_report(G: Graph, A: PermutationGroup | None = None, cycles: list[HamCycle] | None = None) -> HamOrbitReport:
    A = automorphism_group(G) if A is None else A
    cycles = enumerate_hamiltonian_cycles(G) if cycles is None else cycles
    orbits = ham_orbits(G, cycles, A)
    f_ham = bool(cycles) and len(orbits) == 1
    # one representative suffices: strong fixing passes to G-similar copies
    f_star = f_ham and groups.is_aut_subgroup(cycle_group(orbits[0].representative.order), G)
    return HamOrbitReport(len(cycles), A.order, tuple(orbits), f_ham, f_star)


def in_F_HAM(G: Graph) -> HamOrbitReport:
    return ham_orbit_report(G)


def in_Fstar_HAM(G: Graph) -> bool:
    return ham_orbit_report(G).in_Fstar_HAM


def circulant_difference_set(G: Graph, C: HamCycle) -> frozenset[int] | None:
    """Relabel G along C; return D if then i ~ j iff (j - i) mod n in D, else None."""
    n = G.n
    pos = {v: i for i, v in enumerate(C.order)}
    D = frozenset((pos[w] - pos[C.order[0]]) % n for w in G.neighbors[C.order[0]])
    for u, i in pos.items():
        got = frozenset((pos[w] - i) % n for w in G.neighbors[u])
        if got != D:
            return None
    return D


def sandwich_check(U: SubgraphLike, K: SubgraphLike, G: Graph) -> bool:
    """If U <= K <= G with U strong fixing in G, check x(K; G) = 1 and A(K) <= A(G)."""
    Ug, Kg = as_graph(U), as_graph(K)
    _check_same_order(Ug, G)
    _check_same_order(Kg, G)
    if not (Ug.edge_set <= Kg.edge_set <= G.edge_set):
        raise ValueError("need U <= K <= G")
    if not fixing_report(Ug, G).strong_fixing:
        raise ValueError("U is not a strong fixing subgraph of G")
    x_K = extension_count(Kg, G)
    return x_K == 1 and groups.is_aut_subgroup(automorphism_group(Kg), G)
