#!/usr/bin/env python3
"""Run a Calabi-Yau weight-system census and print timing plus saturation.

Examples:
    python scripts/run_census.py --dim 1 --max-degree 30
    python scripts/run_census.py --dim 2 --max-degree 300 --saturation-degree 400
"""

import argparse
import time

from wph import CanonicalKind, SearchConstraints, enumerate_families


def run(dim, max_degree):
    start = time.perf_counter()
    families = enumerate_families(
        SearchConstraints(
            dimension=dim,
            canonical_kind=CanonicalKind.CALABI_YAU,
            max_degree=max_degree,
        )
    )
    return families, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--max-degree", type=int, default=300)
    parser.add_argument(
        "--saturation-degree",
        type=int,
        default=None,
        help="re-run at this larger degree bound and compare the result sets",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress the family list")
    args = parser.parse_args()

    families, elapsed = run(args.dim, args.max_degree)
    if not args.quiet:
        for fam in families:
            print(f"{fam.degree} : {','.join(str(a) for a in fam.weights.canonical)}")
    print(
        f"# dimension {args.dim}, max degree {args.max_degree}: "
        f"{len(families)} families in {elapsed:.2f}s"
    )
    if args.saturation_degree is not None:
        again, elapsed2 = run(args.dim, args.saturation_degree)
        same = [(f.degree, f.weights.canonical) for f in families] == [
            (f.degree, f.weights.canonical) for f in again
        ]
        print(
            f"# saturation at max degree {args.saturation_degree}: "
            f"{len(again)} families in {elapsed2:.2f}s "
            f"({'unchanged' if same else 'CHANGED'})"
        )


if __name__ == "__main__":
    main()
