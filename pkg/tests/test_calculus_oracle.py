import itertools
from collections import Counter

import pytest

from multirigid.calculus_oracle import (
    DEFAULT_BUDGET,
    Partition,
    SweepBudget,
    consistency_sweep,
    dual_pairing,
    grassmannian_indices,
    index_to_partition,
    lr_coefficient,
    lr_product,
    oracle_violations,
    partition_to_index,
    point_coefficient,
    vanishing_instances,
)
from multirigid.class_flow import FormalClassSum, UNKNOWN, fiber_class
from multirigid.errors import BudgetExceeded, OutOfRectangle
from multirigid.index_core import SchubertIndex


# independent oracle: Schur polynomials in k variables via semistandard tableaux


def _ssyt_contents(shape, k):
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = Counter()

    def fill(i, t):
        if i == len(cells):
            content = [0] * k
            for v in t.values():
                content[v - 1] += 1
            out[tuple(content)] += 1
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, t[(r, c - 1)])
        if r > 0:
            lo = max(lo, t[(r - 1, c)] + 1)
        for v in range(lo, k + 1):
            t[(r, c)] = v
            fill(i + 1, t)
            del t[(r, c)]

    fill(0, {})
    return out


def _schur(shape, k):
    return _ssyt_contents([p for p in shape if p], k)


def _multiply(p, q):
    out = Counter()
    for a, x in p.items():
        for b, y in q.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return out


def _decompose(poly, k):
    poly = Counter({m: c for m, c in poly.items() if c})
    out = {}
    while poly:
        lead = max(m for m in poly if list(m) == sorted(m, reverse=True))
        c = poly[lead]
        out[lead] = c
        for m, v in _schur(lead, k).items():
            poly[m] -= c * v
            if poly[m] == 0:
                del poly[m]
    return out


def _schur_product(lam, mu, k, n):
    prod = _decompose(_multiply(_schur(lam, k), _schur(mu, k)), k)
    return {nu: c for nu, c in prod.items() if nu[0] <= n - k}


def test_partition_dictionary_examples():
    assert index_to_partition((2, 4), 2, 4).parts == (1, 0)
    assert index_to_partition((1, 2), 2, 4).parts == (2, 2)
    assert index_to_partition((3, 4), 2, 4).parts == (0, 0)


def test_partition_dictionary_is_bijective():
    for n in range(2, 8):
        for k in range(1, n):
            seen = set()
            for a in grassmannian_indices(k, n):
                lam = index_to_partition(a, k, n)
                assert partition_to_index(lam) == a
                seen.add(lam.parts)
            assert len(seen) == len(grassmannian_indices(k, n))


def test_out_of_rectangle():
    with pytest.raises(OutOfRectangle):
        index_to_partition((1, 5), 2, 4)
    with pytest.raises(OutOfRectangle):
        Partition((3, 0), 2, 4)


def test_product_examples():
    assert lr_product((2, 4), (2, 4), 2, 4).to_json() == [
        {"co": 1, "index": "A(n=4; d=2) a=1,4"},
        {"co": 1, "index": "A(n=4; d=2) a=2,3"},
    ]
    assert lr_product((1, 3), (2, 4), 2, 4).to_json() == [{"co": 1, "index": "A(n=4; d=2) a=1,2"}]
    assert len(lr_product((1, 4), (3, 4), 2, 5)) == 0


def test_lr_coefficient_known_value():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_lr_agrees_with_schur_expansion():
    for n in range(2, 7):
        for k in range(1, min(3, n - 1) + 1):
            idx = grassmannian_indices(k, n)
            for a, b in itertools.combinations_with_replacement(idx, 2):
                lam = index_to_partition(a, k, n).parts
                mu = index_to_partition(b, k, n).parts
                want = _schur_product(lam, mu, k, n)
                got = {index_to_partition(x, k, n).parts: c.value for c, x in lr_product(a, b, k, n).terms}
                assert got == want, (k, n, a, b)


def test_dual_pairing_examples():
    assert dual_pairing((1, 3), 2, 4) == (2, 4)
    assert point_coefficient(lr_product((1, 3), (2, 4), 2, 4), 2) == 1
    assert dual_pairing((1, 2), 2, 4) == (3, 4)


def test_only_the_dual_pairs_to_the_point():
    k, n = 2, 5
    for a in grassmannian_indices(k, n):
        da = index_to_partition(a, k, n).size
        for b in grassmannian_indices(k, n):
            if da + index_to_partition(b, k, n).size != k * (n - k):
                continue
            pc = point_coefficient(lr_product(a, b, k, n), k)
            assert pc == (1 if b == dual_pairing(a, k, n) else 0)


def test_vanishing_instances_nonempty_and_zero():
    inst = [i for n in range(2, 9) for k in range(1, min(3, n - 1) + 1) for i in vanishing_instances(k, n)]
    assert len(inst) == 259
    assert ((1, 4), (3, 4), 1) in vanishing_instances(2, 5)


def test_oracle_checks_clean():
    assert oracle_violations() == []


def test_sweep_default_budget_is_clean():
    assert consistency_sweep(DEFAULT_BUDGET) == []


def test_sweep_empty_budget():
    assert consistency_sweep(SweepBudget()) == []


def test_sweep_budget_limits():
    with pytest.raises(BudgetExceeded):
        SweepBudget(max_n_a=20)
    with pytest.raises(BudgetExceeded):
        consistency_sweep({"max_n_a": 4})


def test_sweep_catches_injected_fiber_fault():
    def off_by_one(x, t):
        good = fiber_class(x, t)
        terms = []
        for c, y in good.terms:
            if y.family == "A" and y.a and y.a[-1][0] < y.n:
                a = y.a[:-1] + ((y.a[-1][0] + 1, y.a[-1][1]),)
                y = SchubertIndex(y.shape, a)
            terms.append((UNKNOWN, y))
        return FormalClassSum(tuple(terms))

    report = consistency_sweep(SweepBudget(max_n_a=4), fiber_fn=off_by_one)
    assert report
    assert {r["check"] for r in report} >= {"dimension-conservation"}
    assert set(report[0]) == {"check", "input", "expected", "got"}
