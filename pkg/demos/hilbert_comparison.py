"""Truncated Hilbert functions: deformed vs letterplace ideal.

Flatness of the family over the parameter ring predicts that the
quotient by J(2,P) + (all u) and the quotient by L(2,P) have the same
Hilbert function with respect to the positive weighting coming from the
fine grading.  Here we count standard monomials of both ideals degree
by degree up to a truncation bound and compare.

Run:  python3 demos/hilbert_comparison.py [max_degree]
"""

import sys
import time

from lpdeform import Verifier, as_rooted_tree, parse_poset

POSETS = {
    "single element": "elem a",
    "chain a < b": "a < b",
    "chain a < b < c": "a < b\nb < c",
    "star a < b, c": "a < b\na < c",
}


def main():
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    for title, text in POSETS.items():
        tree = as_rooted_tree(parse_poset(text))
        t0 = time.time()
        report = Verifier(tree).compare_hilbert(max_degree)
        took = time.time() - t0
        print(f"== {title} ==")
        print(f"  J side: {report.params['J']}")
        print(f"  L side: {report.params['L']}")
        print(f"  {'agree' if report.passed else 'DISAGREE'} "
              f"up to degree {max_degree} ({took:.2f}s)")


if __name__ == "__main__":
    main()
