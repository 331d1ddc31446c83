"""Find the smallest type-A flag shape with an index whose essential positions
are not totally ordered by the link relation, and print the first witness.

F(1,2;n) never has one: the second entry's condition is visible in G(2,n).
"""

import argparse
import itertools

from multirigid.index_core import FlagShape, enumerate_indices, format_index
from multirigid.rigidity_engine import link_order


def shapes(max_n):
    for n in range(3, max_n + 1):
        for k in range(2, n):
            for dims in itertools.combinations(range(1, n), k):
                yield FlagShape("A", n, dims)


def first_witness(max_n):
    for shape in shapes(max_n):
        for x in enumerate_indices(shape):
            closure, total = link_order(x)
            if not total:
                return x, sorted(closure)
    return None, None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    x, closure = first_witness(args.max_n)
    print("no witness" if x is None else f"{format_index(x)} {closure}")


if __name__ == "__main__":
    main()
