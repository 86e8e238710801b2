"""List every connected graph on n vertices whose Hamiltonian cycles are all strong fixing."""

import argparse

from fixsub.census import connected_graphs_up_to_iso
from fixsub.fixing import circulant_difference_set, ham_orbit_report
from fixsub.graphs import encode_graph6


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="+")
    args = ap.parse_args()
    for n in args.n:
        graphs = connected_graphs_up_to_iso(n)
        hits = []
        for G in graphs:
            rep = ham_orbit_report(G)
            if rep.in_Fstar_HAM:
                D = sorted(circulant_difference_set(G, rep.orbits[0].representative))
                hits.append(f"{encode_graph6(G)} (m={G.m}, D={D})")
        print(f"n={n}: {len(graphs)} connected graphs, {len(hits)} hits")
        for h in hits:
            print("   ", h)


if __name__ == "__main__":
    main()
