"""Permutations, closure-enumerated groups, and automorphisms of graphs.

Permutations are plain tuples of images; ``compose(p, q)`` applies ``q`` first.
Automorphism groups and canonical forms come from one search over the
individualization/refinement tree: at every level only the nodes carrying the
best (label-invariant) refinement invariant survive, so the surviving leaves
form a union of cosets of A(G). The leaves sharing the best certificate are
exactly one coset, which yields every automorphism at once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import Edge, Graph

Perm = tuple[int, ...]

DEFAULT_ORDER_BOUND = 10**7


class GroupTooLarge(RuntimeError):
    """Closure enumeration exceeded its element bound."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p * q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")


def format_perm(p: Perm) -> str:
    return " ".join(map(str, p))


def parse_perm(text: str) -> Perm:
    p = tuple(int(t) for t in text.split())
    check_perm(p)
    return p


def image_edges(p: Perm, edges: Iterable[Edge]) -> frozenset[Edge]:
    out = set()
    for u, v in edges:
        a, b = p[u], p[v]
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def preserves(p: Perm, G: Graph) -> bool:
    """True iff p maps E(G) onto itself."""
    adj = G.adj
    return all(adj[p[u]] >> p[v] & 1 for u, v in G.edges)


def closure(gens: Sequence[Perm], degree: int, bound: int = DEFAULT_ORDER_BOUND) -> set[Perm]:
    """All products of the generators, by breadth-first multiplication."""
    e = identity(degree)
    elements = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > bound:
                        raise GroupTooLarge(f"group order exceeds bound {bound}")
        frontier = nxt
    return elements


def group_order(gens: Sequence[Perm], degree: int | None = None, bound: int = DEFAULT_ORDER_BOUND) -> int:
    if degree is None:
        if not gens:
            return 1
        degree = len(gens[0])
    return len(closure(gens, degree, bound))


def group_elements(gens: Sequence[Perm], degree: int | None = None, bound: int = DEFAULT_ORDER_BOUND) -> list[Perm]:
    """Closure of the generators, sorted lexicographically."""
    if degree is None:
        degree = len(gens[0]) if gens else 0
    return sorted(closure(gens, degree, bound))


def _reduce_generators(elements: Sequence[Perm], degree: int) -> list[Perm]:
    # greedy: walk elements in lex order, keep any not yet generated
    gens: list[Perm] = []
    span = {identity(degree)}
    target = len(elements)
    for x in elements:
        if len(span) == target:
            break
        if x in span:
            continue
        gens.append(x)
        span = closure(gens, degree)
    return gens


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] | None = field(default=None, repr=False)

    @classmethod
    def from_generators(cls, gens: Iterable[Perm], degree: int, bound: int = DEFAULT_ORDER_BOUND) -> "PermutationGroup":
        gens = tuple(sorted(set(gens)))
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
            check_perm(g)
        return cls(degree, gens, tuple(group_elements(gens, degree, bound)))

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], degree: int) -> "PermutationGroup":
        elems = tuple(sorted(elements))
        return cls(degree, tuple(sorted(_reduce_generators(elems, degree))), elems)

    @property
    def order(self) -> int:
        if self.elements is None:
            return group_order(self.generators, self.degree)
        return len(self.elements)

    def all_elements(self) -> tuple[Perm, ...]:
        if self.elements is None:
            return tuple(group_elements(self.generators, self.degree))
        return self.elements

    def __contains__(self, p: Perm) -> bool:
        return p in set(self.all_elements())


def gp_dihedral(n: int) -> PermutationGroup:
    """<rotation, reflection> acting on the labels of G(n, k) (degree 2n)."""
    if n < 3:
        raise ValueError(f"dihedral action needs n >= 3, got {n}")
    alpha = tuple((i + 1) % n for i in range(n)) + tuple(n + (i + 1) % n for i in range(n))
    beta = tuple((-i) % n for i in range(n)) + tuple(n + (-i) % n for i in range(n))
    return PermutationGroup.from_generators([alpha, beta], 2 * n)


def cycle_group(order: Sequence[int], degree: int | None = None) -> PermutationGroup:
    """Dihedral automorphism group of the cycle visiting ``order`` cyclically."""
    n = len(order)
    degree = n if degree is None else degree
    rot = list(range(degree))
    ref = list(range(degree))
    for i, v in enumerate(order):
        rot[v] = order[(i + 1) % n]
        ref[v] = order[(-i) % n]
    return PermutationGroup.from_generators([tuple(rot), tuple(ref)], degree)


# refinement search -------------------------------------------------------------


def _refine(nbrs: tuple[tuple[int, ...], ...], colors: list[int]) -> tuple[list[int], tuple]:
    """Iterate neighbour-colour counting until stable.

    Returns the stable colouring (cells numbered 0..k-1 in invariant order)
    and a label-free invariant of it (the quotient data with cell sizes).
    """
    n = len(colors)
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncells:
            return new, tuple(sorted(Counter(sigs).items()))
        colors, ncells = new, len(ranking)


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return [x + 1 if (x > c or (x == c and w != v)) else x for w, x in enumerate(colors)]


def _target_cell(colors: list[int]) -> list[int] | None:
    counts = Counter(colors)
    multi = [c for c, k in counts.items() if k > 1]
    if not multi:
        return None
    c = min(multi)
    return [v for v, x in enumerate(colors) if x == c]


def _certificate(G: Graph, colors: list[int]) -> tuple[Edge, ...]:
    return tuple(sorted(
        (colors[u], colors[v]) if colors[u] < colors[v] else (colors[v], colors[u])
        for u, v in G.edges
    ))


@dataclass(frozen=True)
class SearchResult:
    labeling: Perm               # vertex -> canonical position
    certificate: tuple[Edge, ...]
    automorphisms: tuple[Perm, ...]


@lru_cache(maxsize=4096)
def _search(G: Graph) -> SearchResult:
    n = G.n
    if n == 0:
        return SearchResult((), (), ((),))
    nbrs = G.neighbors
    start, _ = _refine(nbrs, [0] * n)
    level = [start]
    while True:
        cell = _target_cell(level[0])
        if cell is None:
            break
        best_inv = None
        survivors: list[list[int]] = []
        for colors in level:
            for v in _target_cell(colors):
                child, inv = _refine(nbrs, _individualize(colors, v))
                if best_inv is None or inv > best_inv:
                    best_inv, survivors = inv, [child]
                elif inv == best_inv:
                    survivors.append(child)
        level = survivors
    certs = [_certificate(G, c) for c in level]
    best = min(certs)
    leaves = [tuple(c) for c, cert in zip(level, certs) if cert == best]
    first = leaves[0]
    # a leaf maps vertex -> position; leaf^-1 . first carries first's labelling onto leaf's
    autos = sorted({compose(inverse(leaf), first) for leaf in leaves})
    return SearchResult(first, best, tuple(autos))


def automorphism_group(G: Graph) -> PermutationGroup:
    """A(G) with every element enumerated and a small sorted generating set."""
    return PermutationGroup.from_elements(_search(G).automorphisms, G.n)


def automorphism_generators(G: Graph) -> PermutationGroup:
    return automorphism_group(G)


def canonical_certificate(G: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Hashable isomorphism-class invariant: equal iff the graphs are isomorphic."""
    return (G.n, _search(G).certificate)


def canonical_labeling(G: Graph) -> Graph:
    return Graph.from_edges(G.n, _search(G).certificate)


def canonical_relabeling(G: Graph) -> Perm:
    """Vertex -> canonical position; G.relabel(result) == canonical_labeling(G)."""
    return _search(G).labeling


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_certificate(G) == canonical_certificate(H)


def find_isomorphism(G: Graph, H: Graph) -> Perm | None:
    """A permutation p with G.relabel(p) == H, or None."""
    if not is_isomorphic(G, H):
        return None
    return compose(inverse(canonical_relabeling(H)), canonical_relabeling(G))


# subgraph actions --------------------------------------------------------------


def subgraph_stabilizer_order(A: PermutationGroup, edges: Iterable[Edge]) -> int:
    """|{s in A : s(E(U)) = E(U)}|."""
    E = frozenset(edges)
    return sum(1 for p in A.all_elements() if image_edges(p, E) == E)


def subgraph_orbit(A: PermutationGroup, edges: Iterable[Edge]) -> set[frozenset[Edge]]:
    E = frozenset(edges)
    return {image_edges(p, E) for p in A.all_elements()}


def is_aut_subgroup(U_group: PermutationGroup, G: Graph) -> bool:
    """True iff every generator of ``U_group`` is an automorphism of G."""
    if U_group.degree != G.n:
        raise ValueError(f"degree mismatch: group on {U_group.degree} points, graph on {G.n}")
    return all(preserves(g, G) for g in U_group.generators)
