"""Permutation windows for Weyl group elements and their Schubert indices.

A window lists ``w(1), ..., w(n)``.  For families B and D the window commutes
with ``i -> n + 1 - i`` and is determined by its first ``m = n // 2`` entries;
the *signed half* records entry ``w_i`` as ``+w_i`` when ``w_i <= m`` and as
``-(n + 1 - w_i)`` otherwise, so that ``w`` sends ``e_i`` to ``sign * e_|v_i|``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .errors import IndexSyntaxError, InvariantError, NotMinimal
from .index_core import MINUS, PLUS, FlagShape, SchubertIndex, spinor_involution


@dataclass(frozen=True)
class WeylWindow:
    family: str
    n: int
    entries: tuple

    def __post_init__(self):
        e = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", e)
        n = self.n
        if sorted(e) != list(range(1, n + 1)):
            raise InvariantError("Range", "window must be a permutation of 1..n")
        if self.family == "A":
            return
        if self.family not in ("B", "D"):
            raise InvariantError("Range", f"unknown family {self.family!r}")
        if (self.family == "B") != (n % 2 == 1):
            raise InvariantError("Range", "family B needs n odd, family D n even")
        if any(e[i] != n + 1 - e[n - 1 - i] for i in range(n)):
            raise InvariantError("Range", "orthogonal window must satisfy w_i = n+1-w_(n+1-i)")
        m = n // 2
        if self.family == "D":
            if sum(1 for v in e[:m] if v > m) % 2:
                raise InvariantError("ParityD", "type D window needs an even number of sign changes")

    @property
    def m(self):
        return self.n // 2

    def __str__(self):
        return "w=(" + ",".join(map(str, self.entries)) + ")"


def signed_half(w):
    m, n = w.m, w.n
    return tuple(v if v <= m else v - n - 1 for v in w.entries[:m])


def from_signed_half(family, n, v):
    m = n // 2
    if len(v) != m:
        raise InvariantError("Range", f"signed half needs {m} entries")
    first = [x if x > 0 else n + 1 + x for x in v]
    middle = [m + 1] if n % 2 else []
    full = first + middle + [n + 1 - x for x in reversed(first)]
    return WeylWindow(family, n, tuple(full))


def parse_window(text, family, n):
    """Accept ``w=(...)``, ``(...)`` or a bare list; B/D may give the first half."""
    body = re.sub(r"\s+", "", str(text))
    body = body[2:] if body.startswith("w=") else body
    body = body.strip("()[]")
    try:
        vals = tuple(int(t) for t in body.split(",") if t != "")
    except ValueError:
        raise IndexSyntaxError(f"cannot parse window {text!r}") from None
    if family != "A" and len(vals) == n // 2:
        m = n // 2
        first = list(vals)
        if n % 2 and (m + 1) in first:
            raise InvariantError("Range", "first half of a B window cannot contain m+1")
        middle = [m + 1] if n % 2 else []
        vals = tuple(first + middle + [n + 1 - x for x in reversed(first)])
    if len(vals) != n:
        raise IndexSyntaxError(f"window needs {n} entries (or {n // 2} for B/D)")
    return WeylWindow(family, n, vals)


def compose(u, v):
    """Product ``u v`` as maps: (u v)(i) = u(v(i))."""
    return WeylWindow(u.family, u.n, tuple(u.entries[x - 1] for x in v.entries))


def inverse(w):
    inv = [0] * w.n
    for i, x in enumerate(w.entries, start=1):
        inv[x - 1] = i
    return WeylWindow(w.family, w.n, tuple(inv))


def identity(family, n):
    return WeylWindow(family, n, tuple(range(1, n + 1)))


def _inversions(seq):
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def length(w):
    """Coxeter length for the Borel of upper triangular matrices."""
    if w.family == "A":
        return _inversions(w.entries)
    m = w.m
    v = signed_half(w)
    # conjugate by the longest element of S_m to reach the usual signed-permutation convention
    t = [(1 if v[m - 1 - i] > 0 else -1) * (m + 1 - abs(v[m - 1 - i])) for i in range(m)]
    neg = [abs(x) for x in t if x < 0]
    if w.family == "B":
        return _inversions(t) + sum(neg)
    return _inversions(t) + sum(x - 1 for x in neg)


# blocks and minimality


def _position_blocks(shape):
    """Blocks of positions (0-based) permuted by W_P in the first half."""
    limit = shape.n if shape.family == "A" else shape.m
    out, prev = [], 0
    for d in shape.dims:
        out.append(list(range(prev, d)))
        prev = d
    out.append(list(range(prev, limit)))
    return out


def _check_shape(w, shape):
    if w.family != shape.family or w.n != shape.n:
        raise InvariantError("Range", "window and shape disagree on family or n")


def is_minimal_rep(w, shape):
    """True iff ``w`` is the shortest element of its W_P coset."""
    _check_shape(w, shape)
    e = w.entries
    blocks = _position_blocks(shape)
    for blk in blocks:
        if any(e[blk[i]] > e[blk[i + 1]] for i in range(len(blk) - 1)):
            return False
    if shape.family == "A":
        return True
    m = w.m
    rest = blocks[-1]
    if not rest:
        return True
    v = signed_half(w)
    if shape.family == "B":
        return v[m - 1] > 0
    if len(rest) >= 2:
        p, q = v[m - 2], v[m - 1]
        return (p if abs(p) < abs(q) else q) > 0
    return True


def minimal_in_blocks(w, shape):
    """Shortest element of the coset of ``w`` (type A: sort each block)."""
    if shape.family != "A":
        from .root_geometry import coset_extreme_rep, parabolic_of

        return coset_extreme_rep(w, frozenset(), parabolic_of(shape), "min")
    e = list(w.entries)
    for blk in _position_blocks(shape):
        vals = sorted(e[i] for i in blk)
        for i, val in zip(blk, vals):
            e[i] = val
    return WeylWindow("A", w.n, tuple(e))


# index <-> window


def index_to_window(x):
    shape = x.shape
    n = shape.n
    if shape.family == "A":
        blocks = _position_blocks(shape)
        e = [0] * n
        used = set()
        for t, blk in enumerate(blocks[:-1], start=1):
            vals = sorted(v for v, u in x.a if u == t)
            for i, val in zip(blk, vals):
                e[i] = val
            used.update(vals)
        rest = sorted(set(range(1, n + 1)) - used)
        for i, val in zip(blocks[-1], rest):
            e[i] = val
        return WeylWindow("A", n, tuple(e))
    if x.component == MINUS:
        x = spinor_involution(x)
    m = shape.m
    blocks = _position_blocks(shape)
    half = [0] * m
    used = set()
    for t, blk in enumerate(blocks[:-1], start=1):
        vals = [v for v, u in x.a if u == t] + [n - v for v, u in x.b if u == t]
        vals.sort()
        for i, val in zip(blk, vals):
            half[i] = val
            used.add(val if val <= m else n + 1 - val)
    rest = sorted(set(range(1, m + 1)) - used)
    negatives = len(x.b)
    if shape.family == "D" and negatives % 2:
        if not rest:
            raise InvariantError("ParityD", "index has the wrong parity for its component")
        rest[-1] = n + 1 - rest[-1]
    for i, val in zip(blocks[-1], rest):
        half[i] = val
    middle = [m + 1] if n % 2 else []
    full = half + middle + [n + 1 - v for v in reversed(half)]
    return WeylWindow(shape.family, n, tuple(full))


def window_to_index(w, shape, component=PLUS):
    _check_shape(w, shape)
    if not is_minimal_rep(w, shape):
        raise NotMinimal(f"{w} is not the shortest element of its coset")
    blocks = _position_blocks(shape)
    e = w.entries
    if shape.family == "A":
        entries = sorted((e[i], t) for t, blk in enumerate(blocks[:-1], start=1) for i in blk)
        return SchubertIndex(shape, tuple(entries))
    m, n = w.m, w.n
    a, b = [], []
    for t, blk in enumerate(blocks[:-1], start=1):
        for i in blk:
            if e[i] <= m:
                a.append((e[i], t))
            else:
                b.append((n - e[i], t))
    x = SchubertIndex(shape, tuple(sorted(a)), tuple(sorted(b)))
    if component == MINUS:
        x = spinor_involution(x)
    return x


# brute-force group data for oracles


def group_elements(family, n):
    """Every element of the Weyl group as windows (small n only)."""
    import itertools

    if family == "A":
        for p in itertools.permutations(range(1, n + 1)):
            yield WeylWindow("A", n, p)
        return
    m = n // 2
    for p in itertools.permutations(range(1, m + 1)):
        for signs in itertools.product((1, -1), repeat=m):
            if family == "D" and signs.count(-1) % 2:
                continue
            yield from_signed_half(family, n, tuple(s * x for s, x in zip(signs, p)))


def word_lengths(family, n):
    """Breadth-first search over right multiplication by simple reflections."""
    from .root_geometry import reflection_window, simple_roots

    size = n if family == "A" else n // 2
    gens = [reflection_window(family, n, r) for r in simple_roots(family, size)]
    start = identity(family, n)
    dist = {start.entries: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            u = compose(w, g)
            if u.entries not in dist:
                dist[u.entries] = dist[w.entries] + 1
                queue.append(u)
    return dist
