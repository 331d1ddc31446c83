"""Root systems, parabolic data and essential simple roots.

Roots are integer vectors in the epsilon basis: length n for type A, length
m = n // 2 for B and D.  Type A uses simple roots ``e_{i+1} - e_i``; B and D use
``e_i - e_{i+1}`` together with ``e_m`` (B) or ``e_{m-1} + e_m`` (D).  In each
case the positive system is the one whose descents match the window
conventions, so the identity window is the point class.

Parabolics are frozensets of 1-based simple root positions (the set I_P).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IncompatibleParabolics, IncompatibleRank, NotMinimal, TooManyFactors
from .weyl_windows import WeylWindow, compose, inverse, signed_half


def _unit(size, i, c=1):
    r = [0] * size
    r[i] = c
    return r


def simple_roots(family, size):
    """Simple roots; ``size`` is n for type A and m = n // 2 for B, D."""
    if family == "A":
        if size < 2:
            raise IncompatibleRank("type A needs n >= 2")
        out = []
        for i in range(size - 1):
            r = [0] * size
            r[i], r[i + 1] = -1, 1
            out.append(tuple(r))
        return out
    if family == "B":
        if size < 1:
            raise IncompatibleRank("type B needs m >= 1")
    elif family == "D":
        if size < 2:
            raise IncompatibleRank("type D needs m >= 2")
    else:
        raise IncompatibleRank(f"unknown family {family!r}")
    out = []
    for i in range(size - 1):
        r = [0] * size
        r[i], r[i + 1] = 1, -1
        out.append(tuple(r))
    last = [0] * size
    if family == "B":
        last[-1] = 1
    else:
        last[-2] = last[-1] = 1
    out.append(tuple(last))
    return out


def simple_coordinates(family, root):
    """Coefficients of ``root`` in the simple roots (exact integers)."""
    size = len(root)
    if family == "A":
        out, acc = [], 0
        for i in range(size - 1):
            acc += root[i]
            out.append(-acc)
        return tuple(out)
    pref = list(itertools.accumulate(root))
    if family == "B":
        return tuple(pref)
    out = pref[: size - 2]
    s = pref[size - 2]
    last = root[size - 1]
    out.append((s - last) // 2)
    out.append((s + last) // 2)
    return tuple(out)


def all_roots(family, size):
    out = []
    if family == "A":
        for i in range(size):
            for j in range(size):
                if i != j:
                    r = [0] * size
                    r[i], r[j] = 1, -1
                    out.append(tuple(r))
        return out
    for i in range(size):
        for j in range(i + 1, size):
            for si in (1, -1):
                for sj in (1, -1):
                    r = [0] * size
                    r[i], r[j] = si, sj
                    out.append(tuple(r))
        if family == "B":
            out.append(tuple(_unit(size, i)))
            out.append(tuple(_unit(size, i, -1)))
    return out


def is_positive(family, root):
    return all(c >= 0 for c in simple_coordinates(family, root))


def positive_roots(family, size):
    return [r for r in all_roots(family, size) if is_positive(family, r)]


def root_size(w):
    return w.n if w.family == "A" else w.n // 2


def act(w, root):
    """Image of ``root`` under the Weyl group element ``w``."""
    size = root_size(w)
    if len(root) != size:
        raise IncompatibleRank("root and window live in different ranks")
    out = [0] * size
    if w.family == "A":
        for j, c in enumerate(root):
            out[w.entries[j] - 1] += c
    else:
        for j, v in enumerate(signed_half(w)):
            out[abs(v) - 1] += root[j] if v > 0 else -root[j]
    return tuple(out)


def reflection_window(family, n, root):
    """Window of the reflection in ``root``."""
    size = len(root)
    norm = sum(c * c for c in root)
    images = []
    for j in range(size):
        e = _unit(size, j)
        dot = root[j]
        img = tuple(e[i] - (2 * dot * root[i]) // norm for i in range(size))
        images.append(img)
    if family == "A":
        return WeylWindow("A", n, tuple(img.index(1) + 1 for img in images))
    half = []
    for img in images:
        i = next(i for i, c in enumerate(img) if c)
        half.append((i + 1) if img[i] > 0 else n - i)
    m = n // 2
    middle = [m + 1] if n % 2 else []
    return WeylWindow(family, n, tuple(half + middle + [n + 1 - v for v in reversed(half)]))


@dataclass(frozen=True)
class RootContext:
    family: str
    size: int
    parabolic: frozenset

    @property
    def simple(self):
        return simple_roots(self.family, self.size)

    def rank(self):
        return len(self.simple)

    def levi_positive(self):
        return [
            r
            for r in positive_roots(self.family, self.size)
            if all(c == 0 or (i + 1) in self.parabolic for i, c in enumerate(simple_coordinates(self.family, r)))
        ]

    def opposite_parabolic_roots(self):
        """R^- together with the positive roots of the Levi."""
        neg = [tuple(-c for c in r) for r in positive_roots(self.family, self.size)]
        return set(neg) | set(self.levi_positive())


def parabolic_of(shape):
    """Simple roots of the Levi of the parabolic stabilising a flag of ``shape``."""
    dims = set(shape.dims)
    if shape.family == "A":
        return frozenset(i for i in range(1, shape.n) if i not in dims)
    m = shape.m
    out = {i for i in range(1, m) if i not in dims}
    if shape.family == "B":
        if shape.top < m:
            out.add(m)
    elif shape.top <= m - 2:
        out.add(m)
    return frozenset(out)


def context_for_shape(shape):
    size = shape.n if shape.family == "A" else shape.m
    return RootContext(shape.family, size, parabolic_of(shape))


def _context_for(w, parabolic):
    return RootContext(w.family, root_size(w), frozenset(parabolic))


def _check_minimal(w, ctx):
    for i in ctx.parabolic:
        if not is_positive(ctx.family, act(w, ctx.simple[i - 1])):
            raise NotMinimal(f"{w} is not minimal in its coset")


def stabilizer_simple_roots(w, ctx):
    """I_w: simple roots lying in w(R_{P^-}), computed by the forward action."""
    _check_minimal(w, ctx)
    image = {act(w, r) for r in ctx.opposite_parabolic_roots()}
    return frozenset(i + 1 for i, a in enumerate(ctx.simple) if a in image)


def essential_roots(w, ctx):
    """Simple roots alpha with w^{-1}(alpha) outside R_{P^-}."""
    _check_minimal(w, ctx)
    winv = inverse(w)
    rp = ctx.opposite_parabolic_roots()
    ess = frozenset(i + 1 for i, a in enumerate(ctx.simple) if act(winv, a) not in rp)
    stab = stabilizer_simple_roots(w, ctx)
    assert ess == frozenset(range(1, ctx.rank() + 1)) - stab
    return ess


def coset_extreme_rep(w, from_parabolic, to_parabolic, mode):
    """Extreme representative of ``w W_to``.

    ``min`` returns the shortest element.  ``max`` returns the longest element
    of the coset that is still minimal for ``W_from`` (a pullback).
    """
    from_parabolic, to_parabolic = frozenset(from_parabolic), frozenset(to_parabolic)
    if not from_parabolic <= to_parabolic:
        raise IncompatibleParabolics("source parabolic must be contained in the target")
    size = root_size(w)
    simple = simple_roots(w.family, size)
    refl = {i: reflection_window(w.family, w.n, simple[i - 1]) for i in to_parabolic}

    def walk(u, allowed, up):
        moved = True
        while moved:
            moved = False
            for i in sorted(allowed):
                pos = is_positive(w.family, act(u, simple[i - 1]))
                if pos == up:
                    u = compose(u, refl[i])
                    moved = True
        return u

    if mode == "min":
        return walk(w, to_parabolic, up=False)
    if mode == "max":
        top = walk(w, to_parabolic, up=True)
        return walk(top, from_parabolic, up=False)
    raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")


def ordering_condition(w, ctx, max_factors=6):
    """Search for an ordering of the roots outside I_P satisfying the
    containment of essential sets along successive projections.

    Returns ``(True, ordering)`` with the first witness found, else
    ``(False, None)``.
    """
    _check_minimal(w, ctx)
    rank = ctx.rank()
    outside = [i for i in range(1, rank + 1) if i not in ctx.parabolic]
    if len(outside) > max_factors:
        raise TooManyFactors(f"{len(outside)} factors exceed {max_factors}")
    full = frozenset(range(1, rank + 1))
    maximal = {i: full - {i} for i in outside}
    proj = {i: coset_extreme_rep(w, ctx.parabolic, maximal[i], "min") for i in outside}
    ess = {i: essential_roots(proj[i], _context_for(w, maximal[i])) for i in outside}

    cache = {}

    def ok(i, j):
        if (i, j) not in cache:
            lifted = coset_extreme_rep(proj[j], ctx.parabolic, maximal[j], "max")
            down = coset_extreme_rep(lifted, ctx.parabolic, maximal[i], "min")
            cache[(i, j)] = ess[i] <= essential_roots(down, _context_for(w, maximal[i]))
        return cache[(i, j)]

    for order in itertools.permutations(outside):
        if all(ok(order[p], order[p + 1]) for p in range(len(order) - 1)):
            return True, list(order)
    return False, None
