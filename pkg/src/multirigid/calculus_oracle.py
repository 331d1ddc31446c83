"""Independent type-A Schubert calculus and the cross-module consistency sweep.

Grassmannian products use the Littlewood-Richardson rule by direct
enumeration of column-strict skew tableaux whose reverse reading word is a
lattice word.  Nothing here depends on the rigidity engine except the sweep,
which exercises every module against the others.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .class_flow import Coefficient, FormalClassSum, fiber_class, grassmannian_projection, pushforward
from .errors import BudgetExceeded, OutOfRectangle, SchubertError
from .index_core import (
    MINUS,
    PLUS,
    FlagShape,
    SchubertIndex,
    dimension,
    dual,
    enumerate_indices,
    format_index,
    grassmannian,
)


@dataclass(frozen=True)
class Partition:
    parts: tuple
    k: int
    n: int

    def __post_init__(self):
        p = tuple(int(v) for v in self.parts)
        p = p + (0,) * (self.k - len(p))
        if len(p) > self.k or any(v < 0 for v in p) or any(x < y for x, y in zip(p, p[1:])):
            raise OutOfRectangle(f"{p} is not a partition with at most {self.k} parts")
        if p and p[0] > self.n - self.k:
            raise OutOfRectangle(f"{p} does not fit the {self.k} x {self.n - self.k} rectangle")
        object.__setattr__(self, "parts", p)

    @property
    def size(self):
        return sum(self.parts)


def _values(a):
    if isinstance(a, SchubertIndex):
        return a.a_values
    return tuple(a)


def index_to_partition(a, k, n):
    """lambda_i = n - k + i - a_i."""
    a = _values(a)
    if len(a) != k or any(not 1 <= v <= n for v in a) or any(y <= x for x, y in zip(a, a[1:])):
        raise OutOfRectangle(f"{a} is not an index for G({k},{n})")
    return Partition(tuple(n - k + i - v for i, v in enumerate(a, start=1)), k, n)


def partition_to_index(lam):
    if not isinstance(lam, Partition):
        raise OutOfRectangle("expected a Partition")
    k, n = lam.k, lam.n
    return tuple(n - k + i - p for i, p in enumerate(lam.parts, start=1))


def _as_index(values, k, n):
    return SchubertIndex(grassmannian(n, k), tuple(values))


# Littlewood-Richardson coefficients


def _skew_cells(outer, inner):
    """Cells of outer/inner in reading order: rows top to bottom, right to left."""
    cells = []
    for r, (o, i) in enumerate(zip(outer, inner)):
        for c in range(o - 1, i - 1, -1):
            cells.append((r, c))
    return cells


def lr_coefficient(lam, mu, nu):
    """Number of LR tableaux of shape nu/lam with content mu."""
    rows = max(len(lam), len(mu), len(nu))
    lam = list(lam) + [0] * (rows - len(lam))
    mu = [v for v in mu if v]
    nu = list(nu) + [0] * (rows - len(nu))
    if any(l > v for l, v in zip(lam, nu)) or sum(nu) != sum(lam) + sum(mu):
        return 0
    cells = _skew_cells(nu, lam)
    filling = {}
    used = [0] * (len(mu) + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for val in range(1, len(mu) + 1):
            if used[val] >= mu[val - 1]:
                continue
            # lattice condition on the reading word so far
            if val > 1 and used[val] + 1 > used[val - 1]:
                continue
            # rows weakly increase left to right: cell to the right was read first
            right = filling.get((r, c + 1))
            if right is not None and val > right:
                continue
            # columns strictly increase downward
            above = filling.get((r - 1, c))
            if above is not None and val <= above:
                continue
            filling[(r, c)] = val
            used[val] += 1
            total += place(idx + 1)
            used[val] -= 1
            del filling[(r, c)]
        return total

    return place(0)


def _partitions_in_box(rows, cols, size):
    def rec(i, cap, left):
        if i == rows:
            if left == 0:
                yield ()
            return
        for p in range(min(cap, left), -1, -1):
            for tail in rec(i + 1, p, left - p):
                yield (p,) + tail

    yield from rec(0, cols, size)


def lr_product(a, b, k, n):
    """Expansion of sigma_a * sigma_b in G(k, n) as a FormalClassSum."""
    lam = index_to_partition(a, k, n)
    mu = index_to_partition(b, k, n)
    size = lam.size + mu.size
    terms = []
    for nu in _partitions_in_box(k, n - k, size):
        c = lr_coefficient(lam.parts, mu.parts, nu)
        if c:
            terms.append((Coefficient(c), _as_index(partition_to_index(Partition(nu, k, n)), k, n)))
    terms.sort(key=lambda t: t[1].a_values)
    return FormalClassSum(tuple(terms))


def point_coefficient(product, k):
    for c, x in product.terms:
        if x.a_values == tuple(range(1, k + 1)):
            return c.value
    return 0


def dual_pairing(a, k, n):
    """Complementary index: a_j^vee = n + 1 - a_{k+1-j}."""
    a = _values(a)
    index_to_partition(a, k, n)
    return tuple(n + 1 - a[k - j] for j in range(1, k + 1))


def grassmannian_indices(k, n):
    return list(itertools.combinations(range(1, n + 1), k))


def vanishing_instances(k, n):
    """Pairs (a, c) with sigma_a * sigma_c = 0 that come from a gap of three.

    For a_i <= a_{i+1} - 3 (a_{k+1} = infinity) the class c asks a k-plane to
    meet a general (n - a_i)-plane in dimension k - i + 1.
    """
    out = []
    for a in grassmannian_indices(k, n):
        for i in range(1, k + 1):
            nxt = a[i] if i < k else float("inf")
            if a[i - 1] > nxt - 3:
                continue
            r = k - i + 1
            c = [n - a[i - 1] + j - r for j in range(1, r + 1)] + [n + j - k for j in range(r + 1, k + 1)]
            if c[0] < 1:
                continue
            out.append((a, tuple(c), i))
    return out


# consistency sweep

HARD_LIMITS = {"max_n_a": 8, "max_n_orth": 12, "max_k_orth": 4}


@dataclass(frozen=True)
class SweepBudget:
    """Shape limits for the sweep; ``None`` skips that family.

    Type A covers every flag shape up to ``max_n_a``; orthogonal shapes are
    cut at ``max_k_orth`` steps.
    """

    max_n_a: int | None = None
    max_n_orth: int | None = None
    max_k_orth: int = 3
    checks: tuple = field(default=())

    def __post_init__(self):
        for key, lim in HARD_LIMITS.items():
            val = getattr(self, key)
            if val is not None and val > lim:
                raise BudgetExceeded(f"{key}={val} exceeds the limit {lim}")

    @property
    def empty(self):
        return self.max_n_a is None and self.max_n_orth is None


DEFAULT_BUDGET = SweepBudget(max_n_a=5, max_n_orth=8, max_k_orth=2)

CHECKS = (
    "round-trip",
    "dimension-conservation",
    "duality",
    "essential-roots",
    "pushforward-tower",
    "fiber-validity",
)


def shapes_in_budget(budget):
    out = []
    if budget.max_n_a is not None:
        for n in range(2, budget.max_n_a + 1):
            for k in range(1, n):
                for dims in itertools.combinations(range(1, n), k):
                    out.append(FlagShape("A", n, dims))
    if budget.max_n_orth is not None:
        for n in range(3, budget.max_n_orth + 1):
            fam = "B" if n % 2 else "D"
            m = n // 2
            for k in range(1, budget.max_k_orth + 1):
                for dims in itertools.combinations(range(1, m + 1), k):
                    if fam == "D" and (m < 2 or dims[-1] == m - 1):
                        continue
                    out.append(FlagShape(fam, n, dims))
    return out


def indices_of(shape):
    comps = (PLUS, MINUS) if shape.has_components else (PLUS,)
    for comp in comps:
        yield from enumerate_indices(shape, comp)


def _record(check, x, expected, got):
    return {"check": check, "input": x if isinstance(x, str) else format_index(x), "expected": expected, "got": got}


def _check_round_trip(x):
    from .weyl_windows import index_to_window, window_to_index

    w = index_to_window(x)
    y = window_to_index(w, x.shape, x.component)
    if y != x:
        return [_record("round-trip", x, format_index(x), format_index(y))]
    return []


def _check_conservation(x, fiber_fn):
    out = []
    d = dimension(x)
    for t in range(1, x.shape.k + 1):
        try:
            terms = fiber_fn(x, t).indices()
        except SchubertError as exc:
            out.append(_record("fiber-validity", f"{format_index(x)} t={t}", "valid fiber", exc.kind))
            continue
        base = dimension(pushforward(x, t))
        for y in terms:
            got = dimension(y) + base
            if got != d:
                out.append(_record("dimension-conservation", f"{format_index(x)} t={t}", d, got))
    return out


def _check_tower(x):
    out = []
    k = x.shape.k
    for t in range(1, k + 1):
        for u in range(1, t + 1):
            two = pushforward(pushforward(x, t), u)
            one = pushforward(x, u)
            if two != one:
                out.append(_record("pushforward-tower", f"{format_index(x)} t={t} u={u}", format_index(one), format_index(two)))
        g1 = grassmannian_projection(x, t)
        g2 = grassmannian_projection(pushforward(x, t), t)
        if g1 != g2:
            out.append(_record("pushforward-tower", f"{format_index(x)} t={t}", format_index(g1), format_index(g2)))
    return out


def _check_duality(x):
    from .rigidity_engine import classify_class

    y = dual(x)
    out = []
    if dual(y) != x:
        out.append(_record("duality", x, format_index(x), format_index(dual(y))))
    if dimension(y) != dimension(x):
        out.append(_record("duality", x, dimension(x), dimension(y)))
    cx, cy = classify_class(x).status, classify_class(y).status
    if cx != cy:
        out.append(_record("duality", x, cx, cy))
    return out


def _check_essential_roots(x):
    from .rigidity_engine import essential_subindices
    from .root_geometry import context_for_shape, essential_roots
    from .weyl_windows import index_to_window

    got = essential_roots(index_to_window(x), context_for_shape(x.shape))
    want = set()
    for pos in essential_subindices(x).essential_positions():
        want.add(x.entry(pos)[0])
    if set(got) != want:
        return [_record("essential-roots", x, sorted(want), sorted(got))]
    return []


def consistency_sweep(budget, fiber_fn=fiber_class):
    """Run every cross-module check over the shapes in ``budget``.

    Returns a list of violation records; empty on a correct build.
    ``fiber_fn`` may be replaced to confirm that faults are caught.
    """
    if not isinstance(budget, SweepBudget):
        raise BudgetExceeded("budget must be a SweepBudget")
    if budget.empty:
        return []
    wanted = set(budget.checks or CHECKS)
    report = []
    for shape in shapes_in_budget(budget):
        for x in indices_of(shape):
            if "round-trip" in wanted:
                report += _check_round_trip(x)
            if wanted & {"dimension-conservation", "fiber-validity"}:
                report += [r for r in _check_conservation(x, fiber_fn) if r["check"] in wanted]
            if "pushforward-tower" in wanted:
                report += _check_tower(x)
            if shape.family == "A":
                if "duality" in wanted:
                    report += _check_duality(x)
                if "essential-roots" in wanted:
                    report += _check_essential_roots(x)
    return report


def oracle_violations(max_k=3, max_n=7, max_n_vanishing=8):
    """LR commutativity, additivity, dual pairings and vanishing products."""
    out = []
    for n in range(2, max_n + 1):
        for k in range(1, min(max_k, n - 1) + 1):
            idx = grassmannian_indices(k, n)
            for a in idx:
                av = dual_pairing(a, k, n)
                pc = point_coefficient(lr_product(a, av, k, n), k)
                if pc != 1:
                    out.append(_record("dual-pairing", f"G({k},{n}) {a}", 1, pc))
            for a, b in itertools.combinations_with_replacement(idx, 2):
                p, q = lr_product(a, b, k, n), lr_product(b, a, k, n)
                if p.to_json() != q.to_json():
                    out.append(_record("lr-commutative", f"G({k},{n}) {a}*{b}", p.to_json(), q.to_json()))
                want = index_to_partition(a, k, n).size + index_to_partition(b, k, n).size
                for _, x in p.terms:
                    got = index_to_partition(x, k, n).size
                    if got != want:
                        out.append(_record("lr-codimension", f"G({k},{n}) {a}*{b}", want, got))
    for n in range(2, max_n_vanishing + 1):
        for k in range(1, min(max_k, n - 1) + 1):
            for a, c, _ in vanishing_instances(k, n):
                p = lr_product(a, c, k, n)
                if len(p):
                    out.append(_record("vanishing", f"G({k},{n}) {a}*{c}", [], p.to_json()))
    return out
