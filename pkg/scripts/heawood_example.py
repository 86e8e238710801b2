"""Walk through the rim cycle of the Heawood graph: counts, orbit, p-histogram."""

import argparse
import json

from fixsub import graphs
from fixsub.fixing import extension_count_direct, fixing_report
from fixsub.hamilton import HamCycle, enumerate_hamiltonian_cycles, p_distribution


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show-cycles", action="store_true", help="print all Hamiltonian cycles")
    args = ap.parse_args()

    H = graphs.heawood()
    C = HamCycle.from_order(range(14), H)
    cycles = enumerate_hamiltonian_cycles(H)
    rep = fixing_report(C, H)
    out = rep.to_json()
    out["xDirect"] = extension_count_direct(C, H)
    out["pDistribution"] = p_distribution(H, C, cycles)
    print(json.dumps(out, indent=1))
    if args.show_cycles:
        for c in cycles:
            print(c)


if __name__ == "__main__":
    main()
