import itertools

import pytest

from multirigid.index_core import MINUS, PLUS, FlagShape, enumerate_indices


def type_a_shapes(max_n):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for dims in itertools.combinations(range(1, n), k):
                yield FlagShape("A", n, dims)


def orthogonal_shapes(max_n, max_k=3):
    for n in range(3, max_n + 1):
        fam = "B" if n % 2 else "D"
        m = n // 2
        for k in range(1, max_k + 1):
            for dims in itertools.combinations(range(1, m + 1), k):
                if fam == "D" and dims[-1] == m - 1:
                    continue
                yield FlagShape(fam, n, dims)


def all_indices(shape):
    comps = (PLUS, MINUS) if shape.has_components else (PLUS,)
    for c in comps:
        yield from enumerate_indices(shape, c)


@pytest.fixture(scope="session")
def small_a_indices():
    return [x for s in type_a_shapes(5) for x in all_indices(s)]


@pytest.fixture(scope="session")
def small_orth_indices():
    return [x for s in orthogonal_shapes(8) for x in all_indices(s)]
