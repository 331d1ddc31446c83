"""Flag shapes, Schubert indices and the text grammar.

Type A indices on F(d_1,...,d_k; n) are sequences ``a_1^{alpha_1} < ... `` of
values in ``1..n`` with upper indices in ``1..k``.  Orthogonal indices
(families B and D) carry a second sequence ``b`` and, for ``n = 2 d_k``, a
component sign.  Values are stored as ``(value, upper)`` pairs sorted by value.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

from .errors import (
    BudgetExceeded,
    IndexSyntaxError,
    InvariantError,
    NotApplicable,
    WrongFamily,
)

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class FlagShape:
    family: str
    n: int
    dims: tuple
    # pushforwards of type D flags may land on OG(n/2 - 1, n)
    corank_one_ok: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if self.family not in ("A", "B", "D"):
            raise InvariantError("Range", f"unknown family {self.family!r}")
        if not self.dims:
            raise InvariantError("Range", "a flag shape needs at least one step")
        if any(b <= a for a, b in zip(self.dims, self.dims[1:])):
            raise InvariantError("NotIncreasing", "dimensions must increase")
        if self.dims[0] < 1:
            raise InvariantError("Range", "dimensions must be positive")
        top, n = self.dims[-1], self.n
        if self.family == "A":
            if top >= n:
                raise InvariantError("Range", "need d_k < n")
        elif self.family == "B":
            if n % 2 == 0 or top > (n - 1) // 2:
                raise InvariantError("Range", "family B needs n odd and d_k <= (n-1)/2")
        else:
            if n % 2 or top > n // 2:
                raise InvariantError("Range", "family D needs n even and d_k <= n/2")
            if top == n // 2 - 1 and not self.corank_one_ok:
                raise InvariantError("Range", "family D excludes d_k = n/2 - 1")

    @property
    def k(self):
        return len(self.dims)

    @property
    def top(self):
        return self.dims[-1]

    @property
    def m(self):
        return self.n // 2

    @property
    def orthogonal(self):
        return self.family != "A"

    @property
    def has_components(self):
        return self.family == "D" and self.n == 2 * self.top

    def block_sizes(self):
        prev, out = 0, []
        for d in self.dims:
            out.append(d - prev)
            prev = d
        return out

    def truncated(self, t):
        dims = self.dims[:t]
        return FlagShape(self.family, self.n, dims, corank_one_ok=True)


def orthogonal_family(n):
    return "B" if n % 2 else "D"


def grassmannian(n, k):
    return FlagShape("A", n, (k,))


def type_a_flag(n, dims):
    return FlagShape("A", n, tuple(dims))


def og_shape(k, n):
    return FlagShape(orthogonal_family(n), n, (k,))


def of_shape(n, dims):
    return FlagShape(orthogonal_family(n), n, tuple(dims))


@dataclass(frozen=True)
class SchubertIndex:
    shape: FlagShape
    a: tuple = ()
    b: tuple = ()
    component: str = PLUS

    def __post_init__(self):
        object.__setattr__(self, "a", _normalise_entries(self.a))
        object.__setattr__(self, "b", _normalise_entries(self.b))
        _validate(self)

    # convenience views
    @property
    def s(self):
        return len(self.a)

    @property
    def a_values(self):
        return tuple(v for v, _ in self.a)

    @property
    def b_values(self):
        return tuple(v for v, _ in self.b)

    @property
    def a_uppers(self):
        return tuple(u for _, u in self.a)

    @property
    def b_uppers(self):
        return tuple(u for _, u in self.b)

    @property
    def family(self):
        return self.shape.family

    @property
    def n(self):
        return self.shape.n

    def positions(self):
        """All sub-index positions as ``'a:i'`` / ``'b:j'`` strings, 1-based."""
        out = [f"a:{i}" for i in range(1, len(self.a) + 1)]
        out += [f"b:{j}" for j in range(1, len(self.b) + 1)]
        return out

    def entry(self, position):
        kind, i = parse_position(position)
        seq = self.a if kind == "a" else self.b
        if not 1 <= i <= len(seq):
            raise InvariantError("Range", f"no sub-index {position}")
        return seq[i - 1]

    def __str__(self):
        return format_index(self)


def parse_position(position):
    m = re.fullmatch(r"\s*([ab])\s*:\s*(\d+)\s*", str(position))
    if not m:
        raise IndexSyntaxError(f"bad position {position!r}, expected a:i or b:j")
    return m.group(1), int(m.group(2))


def _normalise_entries(entries):
    out = []
    for e in entries:
        if isinstance(e, int):
            out.append((e, 1))
        else:
            v, u = e
            out.append((int(v), int(u)))
    return tuple(out)


def _validate(x):
    shape = x.shape
    k, n, m = shape.k, shape.n, shape.m
    fam = shape.family
    if x.component not in (PLUS, MINUS):
        raise InvariantError("Range", f"bad component {x.component!r}")
    if x.component == MINUS and not shape.has_components:
        raise InvariantError("Range", "component only applies to type D with n = 2 d_k")
    for v, u in x.a + x.b:
        if not 1 <= u <= k:
            raise InvariantError("Range", f"upper index {u} outside 1..{k}")
    if fam == "A":
        if x.b:
            raise InvariantError("Range", "type A indices have no b entries")
        for v, _ in x.a:
            if not 1 <= v <= n:
                raise InvariantError("Range", f"value {v} outside 1..{n}")
    else:
        for v, _ in x.a:
            if not 1 <= v <= m:
                raise InvariantError("Range", f"a value {v} outside 1..{m}")
        for v, _ in x.b:
            if not 0 <= v <= m - 1:
                raise InvariantError("Range", f"b value {v} outside 0..{m - 1}")
    for seq in (x.a, x.b):
        vals = [v for v, _ in seq]
        if any(q <= p for p, q in zip(vals, vals[1:])):
            raise InvariantError("NotIncreasing", "values must be strictly increasing")
    sizes = shape.block_sizes()
    for t in range(1, k + 1):
        cnt = sum(1 for _, u in x.a + x.b if u == t)
        if cnt != sizes[t - 1]:
            raise InvariantError(
                "UpperCount",
                f"upper index {t} used {cnt} times, expected {sizes[t - 1]}",
            )
    if shape.has_components:
        plus_parity = (x.s - shape.top) % 2 == 0
        if plus_parity != (x.component == PLUS):
            raise InvariantError("ParityD", "length of a has the wrong parity for the component")
    bset = {v + 1 for v, _ in x.b}
    for v, _ in x.a:
        if v in bset:
            raise InvariantError("AdjacencyAB", f"a value {v} equals b value + 1")


# constructors


def make_a(n, dims, entries):
    """Type A index; ``entries`` are values (single step) or (value, upper)."""
    return SchubertIndex(type_a_flag(n, dims), tuple(entries))


def make_og(k, n, a=(), b=(), component=PLUS):
    return SchubertIndex(og_shape(k, n), tuple(a), tuple(b), component)


def make_of(n, dims, a=(), b=(), component=PLUS):
    return SchubertIndex(of_shape(n, dims), tuple(a), tuple(b), component)


# grammar

_HEADER = re.compile(r"^(A|OG|OF)\(([^)]*)\)(.*)$")
_BODY = re.compile(r"^(?:a=([0-9^,]*))?(?:b=([0-9^,]*))?(?:comp=([+-]))?$")


def _kv(text, expected):
    out = {}
    for part in re.split(r"[;,]", text):
        if not part:
            continue
        if "=" not in part:
            # continuation of a d-list: d=1,2,3
            if "d" in out:
                out["d"].append(part)
                continue
            raise IndexSyntaxError(f"bad header field {part!r}")
        key, val = part.split("=", 1)
        if key not in expected or key in out:
            raise IndexSyntaxError(f"unexpected header field {key!r}")
        out[key] = [val] if key == "d" else val
    if set(out) != set(expected):
        raise IndexSyntaxError(f"header needs fields {sorted(expected)}")
    try:
        return {key: ([int(v) for v in val] if key == "d" else int(val)) for key, val in out.items()}
    except ValueError as exc:
        raise IndexSyntaxError(f"non-integer header value: {exc}") from None


def _parse_shape_header(head, args):
    if head == "A":
        f = _kv(args, {"n", "d"})
        return FlagShape("A", f["n"], tuple(f["d"]))
    if head == "OG":
        f = _kv(args, {"k", "n"})
        return FlagShape(orthogonal_family(f["n"]), f["n"], (f["k"],))
    f = _kv(args, {"n", "d"})
    return FlagShape(orthogonal_family(f["n"]), f["n"], tuple(f["d"]))


def parse_shape(text):
    """Parse a bare shape such as ``A(n=4; d=2,3)`` or ``OG(k=1,n=5)``."""
    compact = re.sub(r"\s+", "", str(text))
    m = _HEADER.match(compact)
    if not m or m.group(3):
        raise IndexSyntaxError(f"cannot parse shape {text!r}")
    return _parse_shape_header(m.group(1), m.group(2))


def _parse_seq(text, single_step):
    if text is None or text == "":
        return ()
    out = []
    for tok in text.split(","):
        mm = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
        if not mm:
            raise IndexSyntaxError(f"bad entry {tok!r}")
        v = int(mm.group(1))
        if mm.group(2) is None:
            if not single_step:
                raise IndexSyntaxError(f"entry {tok!r} needs an upper index on a multi-step flag")
            u = 1
        else:
            u = int(mm.group(2))
        out.append((v, u))
    return tuple(out)


def parse_index(text):
    """Parse index text; raises IndexSyntaxError or InvariantError."""
    if not isinstance(text, str):
        raise IndexSyntaxError("index text must be a string")
    compact = re.sub(r"\s+", "", text)
    m = _HEADER.match(compact)
    if not m:
        raise IndexSyntaxError(f"cannot parse index {text!r}")
    head, args, body = m.groups()
    shape = _parse_shape_header(head, args)
    bm = _BODY.match(body)
    if not bm:
        raise IndexSyntaxError(f"cannot parse index body {body!r}")
    a_txt, b_txt, comp = bm.groups()
    if head == "A" and (b_txt is not None or comp is not None):
        raise IndexSyntaxError("type A indices take only an a sequence")
    if head == "A" and a_txt is None:
        raise IndexSyntaxError("type A index needs an a sequence")
    single = shape.k == 1
    # text order is kept so that an unsorted sequence is reported as such
    a = _parse_seq(a_txt, single)
    b = _parse_seq(b_txt, single)
    return SchubertIndex(shape, a, b, comp or PLUS)


def _fmt_seq(seq, single):
    if single:
        return ",".join(str(v) for v, _ in seq)
    return ",".join(f"{v}^{u}" for v, u in seq)


def format_shape(shape):
    if shape.family == "A":
        return f"A(n={shape.n}; d={','.join(map(str, shape.dims))})"
    if shape.k == 1:
        return f"OG(k={shape.top},n={shape.n})"
    return f"OF(n={shape.n}; d={','.join(map(str, shape.dims))})"


def format_index(x):
    single = x.shape.k == 1
    parts = [format_shape(x.shape)]
    if x.family == "A":
        parts.append("a=" + _fmt_seq(x.a, single))
    else:
        if x.a:
            parts.append("a=" + _fmt_seq(x.a, single))
        if x.b:
            parts.append("b=" + _fmt_seq(x.b, single))
        if x.component == MINUS:
            parts.append("comp=-")
    return " ".join(parts)


# enumeration


def count_indices(shape):
    """Number of Schubert classes, i.e. |W^P| for the shape."""
    sizes = shape.block_sizes()
    if shape.family == "A":
        rest = shape.n - shape.top
        return math.factorial(shape.n) // (math.prod(math.factorial(c) for c in sizes) * math.factorial(rest))
    m = shape.m
    r = m - shape.top
    total = 2 ** shape.top * math.factorial(m) // (math.prod(math.factorial(c) for c in sizes) * math.factorial(r))
    return total // 2 if shape.has_components else total


def enumerate_indices(shape, component=PLUS, budget=None):
    """Yield every valid index on ``shape`` exactly once, in a fixed order."""
    if budget is not None and count_indices(shape) > budget:
        raise BudgetExceeded(f"{count_indices(shape)} indices exceed budget {budget}")
    if component == MINUS and not shape.has_components:
        raise NotApplicable("component only applies to type D with n = 2 d_k")
    sizes = shape.block_sizes()
    if shape.family == "A":
        for blocks in _ordered_blocks(range(1, shape.n + 1), sizes):
            entries = [(v, t + 1) for t, blk in enumerate(blocks) for v in blk]
            yield SchubertIndex(shape, tuple(sorted(entries)))
        return
    # each entry occupies one "absolute value" c in 1..m: a = c or b = c - 1
    for blocks in _ordered_blocks(range(1, shape.m + 1), sizes):
        flat = [(c, t + 1) for t, blk in enumerate(blocks) for c in blk]
        for signs in itertools.product((True, False), repeat=len(flat)):
            a = sorted((c, u) for (c, u), pos in zip(flat, signs) if pos)
            b = sorted((c - 1, u) for (c, u), pos in zip(flat, signs) if not pos)
            if shape.has_components:
                plus = (len(a) - shape.top) % 2 == 0
                if plus != (component == PLUS):
                    continue
            yield SchubertIndex(shape, tuple(a), tuple(b), component)


def _ordered_blocks(pool, sizes):
    pool = tuple(pool)
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(pool, sizes[0]):
        rest = tuple(v for v in pool if v not in first)
        for tail in _ordered_blocks(rest, sizes[1:]):
            yield (first,) + tail


# involutions and dimension


def dimension(x):
    """Dimension of the Schubert variety: Coxeter length of its window."""
    from .weyl_windows import index_to_window, length

    return length(index_to_window(x))


def dual(x):
    """Image under F(d_1..d_k; n) = F(n-d_k..n-d_1; n), type A only."""
    if x.family != "A":
        raise WrongFamily("duality is implemented for type A flags")
    from .weyl_windows import WeylWindow, index_to_window, minimal_in_blocks, window_to_index

    n = x.n
    w = index_to_window(x).entries
    v = tuple(n + 1 - w[n - i] for i in range(1, n + 1))
    shape = FlagShape("A", n, tuple(n - d for d in reversed(x.shape.dims)))
    v = minimal_in_blocks(WeylWindow("A", n, v), shape)
    return window_to_index(v, shape)


def spinor_involution(x):
    """Swap the two families of maximal isotropic subspaces (n = 2 d_k).

    An entry ``b = n/2 - 1`` becomes ``a = n/2`` or vice versa, keeping its
    upper index; the component flips.
    """
    shape = x.shape
    if shape.family != "D":
        raise WrongFamily("spinor involution needs family D")
    if not shape.has_components:
        raise NotApplicable("spinor involution needs n = 2 d_k")
    m = shape.m
    a, b = list(x.a), list(x.b)
    if b and b[-1][0] == m - 1:
        _, u = b.pop()
        a.append((m, u))
    elif a and a[-1][0] == m:
        _, u = a.pop()
        b.append((m - 1, u))
    else:
        raise NotApplicable("neither a_s = n/2 nor b_(k-s) = n/2 - 1")
    comp = MINUS if x.component == PLUS else PLUS
    return SchubertIndex(shape, tuple(sorted(a)), tuple(sorted(b)), comp)


# restriction sequences for OG(k, n)


@dataclass(frozen=True)
class RestrictionSequence:
    """Linear spaces F_{a_1} < ... < F_{a_s} followed by sub-quadrics.

    ``quadric_pairs`` lists ``(d_j, r_j)`` with d decreasing: Q_{d_j} has
    dimension d_j and a singular locus of dimension r_j.
    """

    a_values: tuple
    quadric_pairs: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a_values", tuple(self.a_values))
        object.__setattr__(self, "quadric_pairs", tuple(tuple(p) for p in self.quadric_pairs))


RESTRICTION_CHECKS = ("length", "decreasing", "gap", "steps", "A1", "A2", "A3")


def restriction_sequence_of(x):
    if x.family == "A" or x.shape.k != 1:
        raise WrongFamily("restriction sequences are defined for OG(k, n)")
    n = x.n
    return RestrictionSequence(x.a_values, tuple((n - bj, bj) for bj in x.b_values), x.shape.top)


def check_restriction_sequence(seq):
    """Evaluate the checkable admissibility conditions; returns name -> bool."""
    a, pairs, k = seq.a_values, seq.quadric_pairs, seq.k
    s = len(a)
    d = [p[0] for p in pairs]
    r = [p[1] for p in pairs]
    q = len(pairs)
    out = {}
    out["length"] = s + q == k
    out["decreasing"] = all(d[i] > d[i + 1] for i in range(q - 1))
    # coranks all equal r_1, or r_t - r_i >= t - i - 1 whenever t > i
    all_equal = all(ri == r[0] for ri in r)
    spread = all(r[t] - r[i] >= t - i - 1 for i in range(q) for t in range(i + 1, q))
    out["gap"] = all_equal or spread
    steps = True
    for t in range(1, q):
        if r[t] == r[t - 1] > r[0]:
            if d[t - 1] - d[t] != 1:
                steps = False
            for i in range(t, q - 1):
                if d[i] - d[i + 1] != r[i + 1] - r[i]:
                    steps = False
    out["steps"] = steps
    out["A1"] = q == 0 or r[-1] <= d[-1] - 3
    out["A2"] = all(ai - rj != 1 for ai in a for rj in r)
    a3 = True
    for j in range(1, q + 1):
        dj, rj = pairs[j - 1]
        xj = sum(1 for ai in a if ai <= rj)
        if xj < k - j + 1 - (dj - rj) // 2:
            a3 = False
    out["A3"] = a3
    return out
