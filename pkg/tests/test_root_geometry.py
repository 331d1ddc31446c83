import pytest

from conftest import all_indices, orthogonal_shapes, type_a_shapes
from multirigid.errors import IncompatibleParabolics, IncompatibleRank, NotMinimal, TooManyFactors
from multirigid.index_core import FlagShape, grassmannian, parse_index
from multirigid.rigidity_engine import essential_subindices
from multirigid.root_geometry import (
    RootContext,
    act,
    all_roots,
    context_for_shape,
    coset_extreme_rep,
    essential_roots,
    ordering_condition,
    parabolic_of,
    positive_roots,
    reflection_window,
    simple_coordinates,
    simple_roots,
    stabilizer_simple_roots,
)
from multirigid.weyl_windows import WeylWindow, compose, group_elements, identity, index_to_window, length


def test_type_a_simple_roots():
    assert simple_roots("A", 4) == [(-1, 1, 0, 0), (0, -1, 1, 0), (0, 0, -1, 1)]


def test_type_b_rank_two_has_one_short_root():
    roots = simple_roots("B", 2)
    assert len(roots) == 2
    assert sorted(sum(c * c for c in r) for r in roots) == [1, 2]


@pytest.mark.parametrize("family,size,count", [("A", 5, 10), ("B", 4, 16), ("D", 4, 12)])
def test_positive_root_counts(family, size, count):
    assert len(positive_roots(family, size)) == count
    assert len(all_roots(family, size)) == 2 * count


@pytest.mark.parametrize("family,size", [("A", 5), ("B", 4), ("D", 5)])
def test_simple_coordinates_reconstruct_roots(family, size):
    simple = simple_roots(family, size)
    for r in all_roots(family, size):
        c = simple_coordinates(family, r)
        back = tuple(sum(ci * s[j] for ci, s in zip(c, simple)) for j in range(size))
        assert back == r
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)


def test_rank_errors():
    with pytest.raises(IncompatibleRank):
        simple_roots("A", 1)
    with pytest.raises(IncompatibleRank):
        act(identity("A", 4), (1, -1, 0))


def test_action_examples():
    w = WeylWindow("A", 4, (1, 3, 2, 4))
    beta2 = (0, -1, 1, 0)
    assert act(w, beta2) == (0, 1, -1, 0)
    assert act(identity("B", 5), (1, 0)) == (1, 0)


def test_reflections_are_involutions_of_length_one_for_simple_roots():
    for fam, n in [("A", 5), ("B", 7), ("D", 8)]:
        size = n if fam == "A" else n // 2
        for r in simple_roots(fam, size):
            s = reflection_window(fam, n, r)
            assert compose(s, s) == identity(fam, n)
            assert length(s) == 1
            assert act(s, r) == tuple(-c for c in r)


def test_grassmannian_stabiliser_and_essential_roots():
    ctx = context_for_shape(grassmannian(4, 2))
    w = WeylWindow("A", 4, (1, 3, 2, 4))
    assert stabilizer_simple_roots(w, ctx) == {2}
    assert essential_roots(w, ctx) == {1, 3}


def test_flag_example_essential_root():
    x = parse_index("A(n=4; d=2,3) a=1^1,2^1,4^2")
    ctx = context_for_shape(x.shape)
    w = index_to_window(x)
    assert essential_roots(w, ctx) == {2}
    assert stabilizer_simple_roots(w, ctx) == {1, 3}


def test_identity_and_longest_extremes():
    # the identity is the point class: stabilised exactly by the Levi roots
    shape = grassmannian(4, 2)
    ctx = context_for_shape(shape)
    assert stabilizer_simple_roots(identity("A", 4), ctx) == ctx.parabolic
    assert essential_roots(identity("A", 4), ctx) == {2}
    top = WeylWindow("A", 4, (3, 4, 1, 2))
    assert stabilizer_simple_roots(top, ctx) == {1, 2, 3}
    assert essential_roots(top, ctx) == set()


def test_non_minimal_window_rejected():
    with pytest.raises(NotMinimal):
        essential_roots(WeylWindow("A", 4, (3, 1, 2, 4)), context_for_shape(grassmannian(4, 2)))


def test_calibration_type_a():
    for shape in type_a_shapes(6):
        ctx = context_for_shape(shape)
        for x in all_indices(shape):
            got = essential_roots(index_to_window(x), ctx)
            want = {x.entry(p)[0] for p in essential_subindices(x).essential_positions()}
            assert got == want, x


def test_essential_is_complement_of_stabiliser_orthogonal():
    for shape in orthogonal_shapes(9):
        ctx = context_for_shape(shape)
        for x in all_indices(shape):
            w = index_to_window(x)
            full = set(range(1, ctx.rank() + 1))
            assert essential_roots(w, ctx) == full - stabilizer_simple_roots(w, ctx)


def test_coset_extremes():
    par = parabolic_of(grassmannian(4, 2))
    assert coset_extreme_rep(WeylWindow("A", 4, (2, 1, 3, 4)), frozenset(), par, "min").entries == (1, 2, 3, 4)
    assert coset_extreme_rep(WeylWindow("A", 4, (1, 3, 2, 4)), frozenset(), par, "max").entries == (3, 1, 4, 2)


def test_coset_extremes_match_brute_force():
    for shape in [FlagShape("A", 5, (2,)), FlagShape("B", 7, (1,)), FlagShape("D", 8, (1,))]:
        par = parabolic_of(shape)
        size = shape.n if shape.family == "A" else shape.m
        simple = simple_roots(shape.family, size)
        elements = list(group_elements(shape.family, shape.n))
        gens = [reflection_window(shape.family, shape.n, simple[i - 1]) for i in par]
        seen = set()
        for w in elements:
            if w.entries in seen:
                continue
            coset, frontier = {w.entries: w}, [w]
            while frontier:
                u = frontier.pop()
                for g in gens:
                    v = compose(u, g)
                    if v.entries not in coset:
                        coset[v.entries] = v
                        frontier.append(v)
            seen |= set(coset)
            lo = min(coset.values(), key=length)
            hi = max(coset.values(), key=length)
            got_lo = coset_extreme_rep(w, frozenset(), par, "min")
            assert got_lo == lo
            assert coset_extreme_rep(got_lo, frozenset(), par, "min") == lo
            assert coset_extreme_rep(w, frozenset(), par, "max") == hi


def test_coset_extreme_parabolic_containment():
    w = identity("A", 4)
    with pytest.raises(IncompatibleParabolics):
        coset_extreme_rep(w, frozenset({1, 2}), frozenset({1}), "min")


def test_min_rep_agrees_with_index_round_trip():
    shape = FlagShape("A", 5, (1, 3))
    par = parabolic_of(shape)
    from multirigid.weyl_windows import window_to_index

    for w in group_elements("A", 5):
        lo = coset_extreme_rep(w, frozenset(), par, "min")
        assert index_to_window(window_to_index(lo, shape)) == lo


def test_ordering_condition_examples():
    x = parse_index("A(n=4; d=2,3) a=1^1,2^1,4^2")
    ok, order = ordering_condition(index_to_window(x), context_for_shape(x.shape))
    assert ok and order == [2, 3]
    y = parse_index("A(n=5; d=2) a=1,4")
    assert ordering_condition(index_to_window(y), context_for_shape(y.shape)) == (True, [2])


def test_ordering_condition_failure_on_two_step_flag():
    # first failure found by scanning F(1,2;5) in enumeration order
    x = parse_index("A(n=5; d=1,2) a=1^1,2^2")
    assert ordering_condition(index_to_window(x), context_for_shape(x.shape)) == (False, None)


def test_ordering_condition_budget():
    shape = FlagShape("A", 8, (1, 2, 3, 4, 5, 6, 7))
    ctx = context_for_shape(shape)
    with pytest.raises(TooManyFactors):
        ordering_condition(identity("A", 8), ctx)


def test_root_context_levi():
    ctx = RootContext("A", 4, frozenset({1, 3}))
    assert sorted(ctx.levi_positive()) == sorted([(-1, 1, 0, 0), (0, 0, -1, 1)])
