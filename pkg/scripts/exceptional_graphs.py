"""Orbit reports for the symmetric generalized Petersen graphs outside the k <= 3 families."""

import argparse
import json

from fixsub.graphs import make_generalized_petersen
from fixsub.fixing import ham_orbit_report
from fixsub.petersen import orbit_signature_text

CASES = [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-large", action="store_true", help="leave out G(24,5)")
    args = ap.parse_args()
    for n, k in CASES:
        if args.skip_large and n > 12:
            continue
        rep = ham_orbit_report(make_generalized_petersen(n, k))
        d = rep.to_json(lambda o: orbit_signature_text(o, n, k))
        print(f"G({n},{k})", json.dumps(d))


if __name__ == "__main__":
    main()
