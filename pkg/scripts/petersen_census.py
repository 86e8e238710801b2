"""Tabulate Hamiltonian-cycle orbits of G(n, k) over a range of n.

One line per graph: cycle count, |A(G)|, membership, and the orbits with their
rim signatures.
"""

import argparse
import time

from fixsub.graphs import make_generalized_petersen
from fixsub.fixing import ham_orbit_report
from fixsub.petersen import orbit_signature_text


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--lo", type=int, default=None)
    ap.add_argument("--hi", type=int, default=16)
    args = ap.parse_args()

    lo = args.lo if args.lo is not None else 2 * args.k + 1
    for n in range(lo, args.hi + 1):
        if 2 * args.k >= n:
            continue
        t0 = time.perf_counter()
        G = make_generalized_petersen(n, args.k)
        rep = ham_orbit_report(G)
        orbits = "  ".join(f"[{o.size}x{o.stab}: {orbit_signature_text(o, n, args.k)}]" for o in rep.orbits)
        print(f"G({n},{args.k})  cycles={rep.cycle_count:<5} |A|={rep.aut_G:<5} "
              f"F={int(rep.in_F_HAM)} F*={int(rep.in_Fstar_HAM)}  {orbits}  ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
