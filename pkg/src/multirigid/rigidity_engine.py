"""Essential sub-indices and multi-rigidity verdicts.

Verdicts are three-valued.  ``Undetermined`` marks the places where the known
sufficient conditions are silent, mostly even n and unresolved rigidity
hypotheses; it is never silently turned into a negative answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .class_flow import grassmannian_projection
from .errors import EmptyInput, NoBEntries, NotEssential, WrongFamily
from .index_core import MINUS, parse_position, spinor_involution

MR = "MultiRigid"
NOT_MR = "NotMultiRigid"
UNDETERMINED = "Undetermined"

RIGIDITY_UNKNOWN = "rigidity-unknown"
OUTSIDE = "outside-theorems"

INF = float("inf")


@dataclass(frozen=True)
class RigidityVerdict:
    status: str
    reason: str
    position: str | None = None

    def to_json(self):
        out = {"status": self.status, "reason": self.reason}
        if self.position is not None:
            out["position"] = self.position
        return out


@dataclass(frozen=True)
class RigidityHints:
    """Sub-indices the caller asserts to be rigid, e.g. ``{'b:2'}``."""

    asserted_rigid: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self,
            "asserted_rigid",
            frozenset("{}:{}".format(*parse_position(p)) for p in self.asserted_rigid),
        )

    def __contains__(self, position):
        return position in self.asserted_rigid


NO_HINTS = RigidityHints()


@dataclass(frozen=True)
class EssentialEntry:
    position: str
    value: int
    upper: int
    essential: bool


@dataclass(frozen=True)
class EssentialReport:
    entries: tuple

    def essential_positions(self):
        return [e.position for e in self.entries if e.essential]

    def to_json(self):
        return {e.position: e.essential for e in self.entries}


# essential sub-indices


def _essential_a(x):
    a = x.a
    out = []
    for i, (v, u) in enumerate(a):
        if i + 1 < len(a):
            nv, nu = a[i + 1]
            out.append(nv != v + 1 or nu > u)
        else:
            out.append(v < x.n)
    return out


def _essential_og(x):
    """Single-step orthogonal rule on (a; b)."""
    a, b = x.a_values, x.b_values
    s = len(a)
    res = {}
    for i in range(1, s + 1):
        if i < s:
            ess = a[i - 1] < a[i] - 1
        elif x.n % 2:
            ess = True
        else:
            ess = not b or a[s - 1] + b[-1] != x.n - 2
        res[f"a:{i}"] = ess
    for j in range(1, len(b) + 1):
        res[f"b:{j}"] = j == 1 or b[j - 1] != b[j - 2] + 1
    return res


def _position_of_value(x, kind, value):
    seq = x.a if kind == "a" else x.b
    for i, (v, _) in enumerate(seq, start=1):
        if v == value:
            return f"{kind}:{i}"
    return None


def essential_map(x):
    """Position -> bool."""
    if x.family == "A":
        return {f"a:{i}": e for i, e in enumerate(_essential_a(x), start=1)}
    if x.shape.k == 1:
        return _essential_og(x)
    res = {p: False for p in x.positions()}
    for t in range(1, x.shape.k + 1):
        y = grassmannian_projection(x, t)
        ey = _essential_og(y)
        for pos, flag in ey.items():
            if flag:
                kind, i = parse_position(pos)
                val = (y.a if kind == "a" else y.b)[i - 1][0]
                res[_position_of_value(x, kind, val)] = True
    return res


def essential_subindices(x):
    emap = essential_map(x)
    entries = []
    for pos in x.positions():
        v, u = x.entry(pos)
        entries.append(EssentialEntry(pos, v, u, emap[pos]))
    return EssentialReport(tuple(entries))


def grassmannian_essential(x, t):
    """Essential positions of x (in x's numbering) inside its t-th Grassmannian image."""
    y = grassmannian_projection(x, t)
    emap = essential_map(y)
    out = set()
    for pos, flag in emap.items():
        if flag:
            kind, i = parse_position(pos)
            val = (y.a if kind == "a" else y.b)[i - 1][0]
            out.add(_position_of_value(x, kind, val))
    return out


# type A


def _classify_a(x, i):
    a = [0] + list(x.a_values) + [INF, INF]
    al = [0] + list(x.a_uppers) + [INF, INF]
    if a[i] - a[i - 1] != 1:
        return RigidityVerdict(NOT_MR, "A.predecessor-gap")
    gap = a[i + 1] - a[i]
    if gap >= 3:
        return RigidityVerdict(MR, "A.gap-3")
    if gap == 2 and al[i] < al[i + 1]:
        return RigidityVerdict(MR, "A.gap-2-rising-upper")
    if gap == 1 and al[i - 1] < al[i + 1]:
        if a[i + 2] - a[i] >= 3:
            return RigidityVerdict(MR, "A.gap-1-far-next")
        if al[i] < al[i + 2] < al[i + 1]:
            return RigidityVerdict(MR, "A.gap-1-nested-uppers")
        # image in G(d_t), t = max(alpha_{i-1}, alpha_i), already has a_i rigid
        if max(al[i - 1], al[i]) < al[i + 2]:
            return RigidityVerdict(MR, "A.gap-1-upper-above-predecessors")
    return RigidityVerdict(NOT_MR, "A.no-case")


def link_relation(x):
    """Pairs (p, q), p before q, with both present in some Grassmannian image
    in which q is essential."""
    ess = essential_subindices(x).essential_positions()
    pairs = set()
    for p_i, p in enumerate(ess):
        for q in ess[p_i + 1 :]:
            up, uq = x.entry(p)[1], x.entry(q)[1]
            for t in range(max(up, uq), x.shape.k + 1):
                if q in grassmannian_essential(x, t):
                    pairs.add((p, q))
                    break
    return ess, pairs


def link_order(x):
    """Transitive closure of the link relation and whether it is total."""
    ess, pairs = link_relation(x)
    closure = set(pairs)
    changed = True
    while changed:
        changed = False
        for p, q in list(closure):
            for r, s in list(closure):
                if q == r and (p, s) not in closure:
                    closure.add((p, s))
                    changed = True
    total = all((p, q) in closure or (q, p) in closure for i, p in enumerate(ess) for q in ess[i + 1 :])
    return closure, total


# orthogonal Grassmannians


def rigid_b1(x):
    if x.family == "A" or x.shape.k != 1:
        raise WrongFamily("rigid_b1 applies to OG(k, n)")
    if not x.b:
        raise NoBEntries("index has no b entries")
    a, b = x.a_values, x.b_values
    if b[0] == 0:
        return True
    k, n = x.shape.top, x.n
    for j, bj in enumerate(b, start=1):
        if bj in a:
            xj = sum(1 for ai in a if ai <= bj)
            if xj > k - j + bj - Fraction(n - 1, 2):
                return True
    return False


OG_REASONS = {
    "a1": "OG.a.consecutive-gap-3",
    "a2": "OG.a.meets-b-gap-3",
    "a3": "OG.a.last-consecutive-small",
    "a4": "OG.a.last-consecutive-corank-1",
    "a5": "OG.a.last-consecutive-corank-2",
    "a6": "OG.a.last-maximal",
    "a7": "OG.a.last-consecutive-odd",
    "a8": "OG.a.last-consecutive-odd-corank-1",
    "b1": "OG.b.consecutive-pair",
    "b2": "OG.b.meets-a-gap-3",
    "b3": "OG.b.last-meets-a-corank-2",
    "b4": "OG.b.last-other-family",
}


def _og_conditions(x, kind, idx):
    """Yield (label, hypothesis) for every sufficient condition that holds.

    ``hypothesis`` is None when the condition needs no rigidity assumption,
    otherwise the positions any one of which being rigid suffices.  Only the
    consecutive-b condition carries such an assumption.
    """
    n = x.n
    even = n % 2 == 0
    half = Fraction(n, 2)
    fl = n // 2
    a = [0] + list(x.a_values) + [INF]
    s = x.s
    bv = list(x.b_values)
    q = len(bv)
    b = [-INF] + bv + [INF]
    last_b = bv[-1] if bv else None
    if kind == "a":
        i = idx
        if i < s:
            if a[i - 1] + 1 == a[i] <= a[i + 1] - 3:
                yield "a1", None
            if a[i] <= a[i + 1] - 3 and a[i] in bv:
                j = bv.index(a[i]) + 1
                if b[j] >= b[j - 1] + 3:
                    yield "a2", None
        else:
            consecutive = a[s] == a[s - 1] + 1
            not_corank = last_b is None or last_b != half - 1
            if even:
                if a[s] <= half - 3 and consecutive:
                    yield "a3", None
                if a[s] == half - 1 and consecutive and not_corank:
                    yield "a4", None
                if a[s] == half - 2 and consecutive and not_corank:
                    yield "a5", None
                if a[s] == half and (last_b is None or last_b <= half - 4):
                    yield "a6", None
            else:
                if a[s] != fl - 1 and consecutive:
                    yield "a7", None
                if a[s] == fl - 1 and consecutive and (last_b is None or last_b != fl - 1):
                    yield "a8", None
        return
    j = idx
    bj = b[j]
    if bj < half - 2 and bj >= b[j - 1] + 3:
        if bj not in x.a_values and b[j + 1] - 1 == bj:
            yield "b1", [f"b:{j}"]
        if bj in x.a_values:
            i = x.a_values.index(bj) + 1
            if a[i] <= a[i + 1] - 3:
                yield "b2", None
    if even and j == q:
        if bj == a[s] == half - 2 and a[s - 1] == half - 3:
            yield "b3", None
        if bj == half - 1 and (j == 1 or b[j - 1] <= half - 4):
            yield "b4", None


def _hypothesis_status(x, positions, hints):
    """True / False / None (unknown) for 'one of positions is rigid'."""
    if any(p in hints for p in positions):
        return True
    if "b:1" in positions:
        return rigid_b1(x)
    return None


def _is_sigma_22(x):
    return x.shape.top == 2 and x.n >= 8 and x.a_values == (2,) and x.b_values == (2,)


def _classify_og(x, position, hints):
    kind, idx = parse_position(position)
    conds = list(_og_conditions(x, kind, idx))
    for name, hyp in conds:
        if hyp is None:
            return RigidityVerdict(MR, OG_REASONS[name])
    unknown = None
    for name, hyp in conds:
        st = _hypothesis_status(x, hyp, hints)
        if st:
            return RigidityVerdict(MR, OG_REASONS[name])
        if st is None and unknown is None:
            unknown = name
    if unknown is not None:
        return RigidityVerdict(UNDETERMINED, RIGIDITY_UNKNOWN)
    if _is_sigma_22(x):
        return RigidityVerdict(UNDETERMINED, OUTSIDE)
    if x.n % 2:
        if kind == "b" and idx == 1 and not rigid_b1(x):
            return RigidityVerdict(NOT_MR, "OG.b1-not-rigid")
        return RigidityVerdict(NOT_MR, "OG.sharp-odd")
    return RigidityVerdict(UNDETERMINED, OUTSIDE)


# dispatch


def _require_essential(x, position):
    emap = essential_map(x)
    if position not in emap:
        raise NotEssential(f"no sub-index {position}")
    if not emap[position]:
        raise NotEssential(f"sub-index {position} is not essential")


def classify_subindex(x, position, hints=NO_HINTS):
    kind, idx = parse_position(position)
    position = f"{kind}:{idx}"
    _require_essential(x, position)
    if x.family == "A":
        return _with_position(_classify_a(x, idx), position)
    if x.component == MINUS:
        y, pos = _to_plus(x, position)
        v = classify_subindex(y, pos, _hints_to_plus(x, hints))
        return _with_position(v, position)
    if x.shape.k == 1:
        return _with_position(_classify_og(x, position, hints), position)
    return _with_position(_classify_of(x, position, hints), position)


def _with_position(v, position):
    return RigidityVerdict(v.status, v.reason, position)


def _spinor_position_map(x):
    """Positions of x -> positions of its spinor image (same sub-spaces)."""
    y = spinor_involution(x)
    m = x.shape.m
    out = {}
    for pos in x.positions():
        kind, _ = parse_position(pos)
        v, _ = x.entry(pos)
        if kind == "a" and v == m:
            out[pos] = _position_of_value(y, "b", m - 1)
        elif kind == "b" and v == m - 1:
            out[pos] = _position_of_value(y, "a", m)
        else:
            out[pos] = _position_of_value(y, kind, v)
    return y, out


def _to_plus(x, position):
    y, mp = _spinor_position_map(x)
    return y, mp[position]


def _hints_to_plus(x, hints):
    _, mp = _spinor_position_map(x)
    return RigidityHints(frozenset(mp[p] for p in hints.asserted_rigid if p in mp))


def _map_hints(x, y, hints):
    out = set()
    for p in hints.asserted_rigid:
        kind, i = parse_position(p)
        seq = x.a if kind == "a" else x.b
        if i <= len(seq):
            q = _position_of_value(y, kind, seq[i - 1][0])
            if q:
                out.add(q)
    return RigidityHints(frozenset(out))


def _classify_of(x, position, hints):
    kind, idx = parse_position(position)
    value, upper = x.entry(position)
    seen_unknown = False
    for t in range(upper, x.shape.k + 1):
        y = grassmannian_projection(x, t)
        q = _position_of_value(y, kind, value)
        if not essential_map(y)[q]:
            continue
        v = classify_subindex(y, q, _map_hints(x, y, hints))
        if v.status == MR:
            return RigidityVerdict(MR, f"OF.pushforward(t={t}):{v.reason}")
        if v.status == UNDETERMINED and v.reason == RIGIDITY_UNKNOWN:
            seen_unknown = True
    return RigidityVerdict(UNDETERMINED, RIGIDITY_UNKNOWN if seen_unknown else OUTSIDE)


def combine(verdicts, reason_all):
    verdicts = list(verdicts)
    if not verdicts:
        raise EmptyInput("nothing to combine")
    for v in verdicts:
        if v.status == NOT_MR:
            return RigidityVerdict(NOT_MR, v.reason, v.position)
    for v in verdicts:
        if v.status == UNDETERMINED:
            return RigidityVerdict(UNDETERMINED, v.reason, v.position)
    return RigidityVerdict(MR, reason_all)


def classify_class(x, hints=NO_HINTS):
    ess = essential_subindices(x).essential_positions()
    if not ess:
        # the fundamental class: stabilised by the whole group
        return RigidityVerdict(MR, "no-essential-subindex")
    verdicts = [classify_subindex(x, p, hints) for p in ess]
    if x.family == "A":
        base = combine(verdicts, "A.all-essential-linked")
        if base.status != MR:
            return base
        _, total = link_order(x)
        if not total:
            return RigidityVerdict(NOT_MR, "A.link-order-not-total")
        return base
    if x.shape.k == 1:
        return combine(verdicts, "OG.all-essential-multirigid")
    base = combine(verdicts, "OF.all-essential-multirigid")
    if base.status != MR:
        return base
    if not _of_links_total(x):
        return RigidityVerdict(UNDETERMINED, OUTSIDE)
    return base


def _of_links_total(x):
    ess = essential_subindices(x).essential_positions()

    def dim(p):
        kind, _ = parse_position(p)
        v, _ = x.entry(p)
        return (v, 0 if kind == "a" else 1)

    ess.sort(key=dim)
    pairs = set()
    for i, p in enumerate(ess):
        for q in ess[i + 1 :]:
            lo = max(x.entry(p)[1], x.entry(q)[1])
            for t in range(lo, x.shape.k + 1):
                if q in grassmannian_essential(x, t):
                    pairs.add((p, q))
                    break
    closure = set(pairs)
    changed = True
    while changed:
        changed = False
        for p, q in list(closure):
            for r, s in list(closure):
                if q == r and (p, s) not in closure:
                    closure.add((p, s))
                    changed = True
    return all((p, q) in closure or (q, p) in closure for i, p in enumerate(ess) for q in ess[i + 1 :])


def combine_product(factors):
    factors = list(factors)
    if not factors:
        raise EmptyInput("no factors")
    return combine(factors, "product.all-factors-multirigid")
