"""Find the first Schubert class on F(1,2;n) with no admissible ordering of its projections."""

import argparse

from multirigid.index_core import FlagShape, enumerate_indices, format_index
from multirigid.root_geometry import context_for_shape, ordering_condition
from multirigid.weyl_windows import index_to_window


def first_failure(n):
    shape = FlagShape("A", n, (1, 2))
    ctx = context_for_shape(shape)
    for x in enumerate_indices(shape):
        w = index_to_window(x)
        ok, _ = ordering_condition(w, ctx)
        if not ok:
            return x, w
    return None, None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()
    x, w = first_failure(args.n)
    print("no failure" if x is None else f"{format_index(x)} {w}")


if __name__ == "__main__":
    main()
