#!/usr/bin/env python3
"""Classify Hadamard and weighing matrices up to a given order.

Prints the number of equivalence classes and, with --show, a canonical
representative of each class.

Usage:
    python3 scripts/classify_designs.py --max-order 4 --show
"""

import argparse
import sys

from canonmat import classify_hadamard, classify_weighing, format_matrix


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=4)
    parser.add_argument("--show", action="store_true",
                        help="print a representative of every class")
    args = parser.parse_args(argv)

    for n in range(1, args.max_order + 1):
        hadamard = classify_hadamard(n)
        print(f"order {n}: {hadamard.count} Hadamard class(es)")
        for k in range(1, n + 1):
            weighing = classify_weighing(n, k)
            print(f"  W({n},{k}): {weighing.count} class(es)")
            if args.show:
                for rep in weighing.representatives:
                    print("\n".join("    " + line for line in
                                    format_matrix(rep).splitlines()[1:]))
                    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
