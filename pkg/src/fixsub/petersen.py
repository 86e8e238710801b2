"""Rim signatures of Hamiltonian cycles in generalized Petersen graphs G(n, k).

A cycle meets the rim (outer vertices 0..n-1) in a sequence of maximal paths;
its signature is the cyclic sequence of their lengths in edges, reduced to the
lexicographically least rotation/reversal so that the dihedral action
(rotate, reflect) leaves it unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .fixing import HamOrbit, ham_orbits
from .graphs import Graph, GraphError, make_generalized_petersen
from .groups import PermutationGroup, automorphism_group
from .hamilton import HamCycle, enumerate_hamiltonian_cycles, is_hamiltonian

log = logging.getLogger(__name__)

Signature = tuple[int, ...]


def canonical_signature(lengths) -> Signature:
    seq = tuple(lengths)
    if not seq:
        return ()
    r = len(seq)
    candidates = []
    for s in (seq, seq[::-1]):
        for i in range(r):
            candidates.append(s[i:] + s[:i])
    return min(candidates)


def format_signature(sig: Signature) -> str:
    return ",".join(map(str, sig))


def parse_signature(text: str) -> Signature:
    text = text.strip()
    return canonical_signature(int(t) for t in text.split(",")) if text else ()


def rim_signature(C: HamCycle, n: int, k: int) -> Signature:
    """Canonical signature of C's maximal rim paths, in rim order."""
    if C.n != 2 * n:
        raise GraphError(f"cycle on {C.n} vertices cannot lie in G({n},{k})")
    if C.host is not None and C.host != make_generalized_petersen(n, k):
        raise GraphError(f"cycle host is not G({n},{k})")
    on = [((i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i)) in C.edges for i in range(n)]
    if not any(on):
        return ()
    if all(on):
        raise GraphError("a Hamiltonian cycle cannot contain the whole rim")
    # start just after a rim gap so no run wraps around
    start = next(i for i in range(n) if not on[i]) + 1
    runs, cur = [], 0
    for j in range(n):
        if on[(start + j) % n]:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return canonical_signature(runs)


@lru_cache(maxsize=256)
def _petersen_data(n: int, k: int) -> tuple[Graph, PermutationGroup, tuple[HamCycle, ...]]:
    G = make_generalized_petersen(n, k)
    return G, automorphism_group(G), tuple(enumerate_hamiltonian_cycles(G))


def cycles_with_signature(n: int, k: int, sig: Signature) -> list[HamCycle]:
    """Hamiltonian cycles of G(n, k) whose rim signature is ``sig`` (enumerate, then filter)."""
    target = canonical_signature(sig)
    _, _, cycles = _petersen_data(n, k)
    return [c for c in cycles if rim_signature(c, n, k) == target]


@dataclass(frozen=True)
class SimilarityClass:
    signatures: tuple[Signature, ...]
    size: int
    stab: int
    representative: HamCycle


def similarity_classes(n: int, k: int, A: PermutationGroup | None = None) -> list[SimilarityClass]:
    """A(G(n,k))-orbits of Hamiltonian cycles, each labelled by its members' signatures."""
    G, A0, cycles = _petersen_data(n, k)
    orbits = ham_orbits(G, list(cycles), A0 if A is None else A)
    return [_label(o, n, k) for o in orbits]


def _label(o: HamOrbit, n: int, k: int) -> SimilarityClass:
    sigs = tuple(sorted({rim_signature(c, n, k) for c in o.members}))
    return SimilarityClass(sigs, o.size, o.stab, o.representative)


def orbit_signature_text(o: HamOrbit, n: int, k: int) -> str:
    return "|".join(format_signature(s) for s in _label(o, n, k).signatures)


def expected_hamiltonicity(n: int, k: int) -> bool:
    """Known answer for k in {1, 2, 3}: only G(n, 2) with n = 5 mod 6 fails."""
    if k not in (1, 2, 3):
        raise ValueError(f"no stated hamiltonicity rule for k={k}")
    make_generalized_petersen(n, k)
    return not (k == 2 and n % 6 == 5)


# witnesses ---------------------------------------------------------------------


def thm7_case2_admissible_k(n: int, allow_three: bool = True) -> list[int]:
    """k in [1, n) with k = n - 3 (mod 4) and k not a multiple of 3 (k = 3 optional)."""
    if n % 6 not in (0, 2, 4) or n == 10:
        raise ValueError(f"n={n} is not in the even, n != 10 case")
    out = []
    for k in range(1, n):
        if (k - (n - 3)) % 4:
            continue
        if k % 3 == 0 and not (allow_three and k == 3):
            continue
        out.append(k)
    return out


def _one_long_run(sig: Signature, k: int) -> bool:
    if k == 1:
        return bool(sig) and all(x == 1 for x in sig)
    return sorted(sig)[-1] == k and all(x == 1 for x in sorted(sig)[:-1])


def thm7_case2_witnesses(n: int, allow_three: bool = True) -> list[Signature]:
    """Realized signatures (k, 1, ..., 1) in G(n, 2), one per admissible k where one exists.

    A returned signature is the smallest realized one of that shape; k values
    with no realized cycle are dropped (and logged).
    """
    realized = sorted({rim_signature(c, n, 2) for c in _petersen_data(n, 2)[2]})
    out = []
    for k in thm7_case2_admissible_k(n, allow_three):
        hits = [s for s in realized if _one_long_run(s, k)]
        if hits:
            out.append(hits[0])
        else:
            log.info("G(%d,2): no Hamiltonian cycle with one rim run of %d and the rest 1", n, k)
    return out


def thm8_candidates(n: int) -> list[Signature]:
    """The two rim sequences listed for G(n, 3), where their formulas are defined.

    Formulas that give a non-positive length or a fractional count for this n
    are skipped, so fewer than two may come back.
    """
    seqs: list[list[int]] = []
    if n % 2 == 0:
        seqs.append([1] * (n // 2))
        if n % 4 == 0:
            if n % 3 == 0:
                t = (n - 6) // 3
                seqs.append([2] * t + [1] * 3)
            else:
                seqs.append([3] * (n // 4))
        else:
            t = (n - 6) // 4
            seqs.append([3] * t + [1] * 3)
    else:
        if n % 3 == 2:
            seqs.append([n - 13, 1, 1, 4, 2])
            if (n - 8) % 3 == 0:
                seqs.append([2] * ((n - 8) // 3) + [1] * 4)
        else:
            seqs.append([n - 5, 1, 1])
            seqs.append([n - 11, 2, 2, 1, 1])
    return [canonical_signature(s) for s in seqs if s and min(s) >= 1]


@dataclass(frozen=True)
class WitnessPair:
    first: Signature
    second: Signature
    from_formula: tuple[bool, bool]


def thm8_witnesses(n: int) -> tuple[Signature, Signature]:
    w = thm8_witness_pair(n)
    return (w.first, w.second)


def _separated(a: set[int], b: set[int]) -> bool:
    # some orbit carrying one signature differs from some orbit carrying the other
    return bool(a) and bool(b) and len(a | b) > 1


def thm8_witness_pair(n: int) -> WitnessPair:
    """Two realized signatures of G(n, 3) lying in different A(G)-orbits.

    The listed sequences are used when realized; any that are undefined for
    this n (or unrealized) are replaced by the least realized signature of
    another orbit, and the substitution is logged.
    """
    if n < 7 or n in (8, 10):
        raise ValueError(f"G(n,3) witnesses need n >= 7, n not in (8, 10); got {n}")
    classes = similarity_classes(n, 3)
    orbit_of: dict[Signature, set[int]] = {}
    for i, cl in enumerate(classes):
        for s in cl.signatures:
            orbit_of.setdefault(s, set()).add(i)

    chosen: list[Signature] = []
    flags: list[bool] = []
    for s in thm8_candidates(n):
        if s not in orbit_of:
            log.info("G(%d,3): listed sequence %s is not realized", n, format_signature(s))
            continue
        if chosen and not _separated(orbit_of[s], orbit_of[chosen[0]]):
            continue
        chosen.append(s)
        flags.append(True)
        if len(chosen) == 2:
            break
    for s in sorted(orbit_of):
        if len(chosen) == 2:
            break
        if chosen and (s == chosen[0] or not _separated(orbit_of[s], orbit_of[chosen[0]])):
            continue
        log.info("G(%d,3): substituting computed signature %s", n, format_signature(s))
        chosen.append(s)
        flags.append(False)
    if len(chosen) < 2:
        raise RuntimeError(f"G({n},3) has fewer than two orbits of Hamiltonian cycles")
    return WitnessPair(chosen[0], chosen[1], (flags[0], flags[1]))


def realized_in_distinct_orbits(n: int, k: int, a: Signature, b: Signature) -> bool:
    """True iff both signatures occur and some cycles carrying them are not G-similar."""
    classes = similarity_classes(n, k)
    ia = {i for i, cl in enumerate(classes) if a in cl.signatures}
    ib = {i for i, cl in enumerate(classes) if b in cl.signatures}
    return _separated(ia, ib)


def is_hamiltonian_gp(n: int, k: int) -> bool:
    return is_hamiltonian(make_generalized_petersen(n, k))
