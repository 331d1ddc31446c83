"""Pushforward and general-fiber classes along the projections of a flag
variety onto its steps.

Fiber coefficients are positive but not computed here; they are carried as
``UNKNOWN`` and printed as ``?``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadStep
from .index_core import MINUS, PLUS, FlagShape, SchubertIndex, format_index, spinor_involution


@dataclass(frozen=True)
class Coefficient:
    value: int | None = None

    @property
    def known(self):
        return self.value is not None

    def to_json(self):
        return "?" if self.value is None else self.value


UNKNOWN = Coefficient(None)
ONE = Coefficient(1)


@dataclass(frozen=True)
class FormalClassSum:
    terms: tuple

    def indices(self):
        return [x for _, x in self.terms]

    def to_json(self):
        return [{"co": c.to_json(), "index": format_index(x)} for c, x in self.terms]

    def __len__(self):
        return len(self.terms)


def _check_step(x, t):
    if not isinstance(t, int) or not 1 <= t <= x.shape.k:
        raise BadStep(f"step {t} outside 1..{x.shape.k}")


def _component_for(shape, component):
    return component if shape.has_components else PLUS


def pushforward(x, t):
    """Image class under F(d_1..d_k) -> F(d_1..d_t): drop entries above t."""
    _check_step(x, t)
    shape = x.shape.truncated(t)
    a = tuple(e for e in x.a if e[1] <= t)
    b = tuple(e for e in x.b if e[1] <= t)
    return SchubertIndex(shape, a, b, _component_for(shape, x.component))


def grassmannian_projection(x, t):
    """Image class in the Grassmannian of d_t-dimensional subspaces."""
    _check_step(x, t)
    s = x.shape
    shape = FlagShape(s.family, s.n, (s.dims[t - 1],), corank_one_ok=True)
    a = tuple((v, 1) for v, u in x.a if u <= t)
    b = tuple((v, 1) for v, u in x.b if u <= t)
    return SchubertIndex(shape, a, b, _component_for(shape, x.component))


@dataclass(frozen=True)
class CountProfile:
    """Counting functions attached to an orthogonal index and a step t."""

    mu: tuple  # mu[i] = #{p <= i : alpha_p <= t}, i = 0..s
    nu: tuple  # nu[j] for j = 1..k-s (index 0 unused)
    x: tuple  # x[j] = #{p : a_p <= b_j, alpha_p <= t}
    h: tuple  # h[i] = #{q : b_q >= a_i, beta_q <= t}
    low_b: int  # #{q : beta_q <= t}

    @classmethod
    def of(cls, idx, t):
        a, b = idx.a, idx.b
        s, q = len(a), len(b)
        mu = [0]
        for v, u in a:
            mu.append(mu[-1] + (u <= t))
        nu = [0] + [mu[s] + sum(1 for bq, uq in b[j - 1 :] if uq <= t) for j in range(1, q + 1)]
        xs = [0] + [sum(1 for ap, up in a if ap <= bj and up <= t) for bj, _ in b]
        hs = [0] + [sum(1 for bq, uq in b if bq >= ai and uq <= t) for ai, _ in a]
        low_b = sum(1 for _, uq in b if uq <= t)
        return cls(tuple(mu), tuple(nu), tuple(xs), tuple(hs), low_b)


def _point_prefix(shape, dt):
    """Values 1..d_t with nondecreasing uppers: the fixed part of the flag."""
    out, prev = [], 0
    for u, d in enumerate(shape.dims, start=1):
        if prev >= dt:
            break
        out += [(j, u) for j in range(prev + 1, min(d, dt) + 1)]
        prev = d
    return out


def _fiber_type_a(x, t):
    dt = x.shape.dims[t - 1]
    low = [(v, u) for v, u in x.a if u <= t]
    high = [(v, u) for v, u in x.a if u > t]
    entries = _point_prefix(x.shape, dt)
    for v, u in high:
        entries.append((v + sum(1 for w, _ in low if w > v), u))
    assert len(low) == dt
    return FormalClassSum(((UNKNOWN, SchubertIndex(x.shape, tuple(sorted(entries)))),))


def fiber_terms_orthogonal(x, t):
    """Raw output of the orthogonal fiber rule: list of (a, b) entry lists."""
    n = x.n
    even = n % 2 == 0
    half = n // 2
    p = CountProfile.of(x, t)
    s = x.s
    A, B = [], []
    split = []
    for i, (v, u) in enumerate(x.a, start=1):
        if u <= t:
            A.append((p.mu[i], u))
            continue
        val = v + p.mu[s] - p.mu[i] + p.h[i]
        if even and val == half and p.low_b % 2:
            B.append((half - 1, u))
        else:
            A.append((val, u))
    for j, (v, u) in enumerate(x.b, start=1):
        if u <= t:
            A.append((p.nu[j], u))
            continue
        if even and v == half - 1:
            if p.low_b % 2:
                A.append((half, u))
            else:
                B.append((half - 1, u))
            continue
        val = v + p.nu[j] - p.x[j]
        if even and val == half - 1:
            split.append(u)
        else:
            B.append((val, u))
    dt = x.shape.dims[t - 1]
    prefix = dict(_point_prefix(x.shape, dt))
    A = [(v, prefix[v]) if u <= t else (v, u) for v, u in A]
    if not split:
        return [(A, B)]
    if len(split) > 1:
        raise AssertionError("fiber rule produced more than one splitting entry")
    u = split[0]
    return [(A + [(half, u)], B), (A, B + [(half - 1, u)])]


def fiber_class(x, t):
    """Class of the general fiber of X -> (pi_t)(X), as a formal sum."""
    _check_step(x, t)
    if x.family == "A":
        return _fiber_type_a(x, t)
    shape = x.shape
    if x.component == MINUS:
        # the rule is stated for the component where s = d_k mod 2
        plus = fiber_class(spinor_involution(x), t)
        return FormalClassSum(tuple((c, spinor_involution(y)) for c, y in plus.terms))
    raw = fiber_terms_orthogonal(x, t)
    terms = []
    for A, B in raw:
        if shape.has_components:
            plus = (len(A) - shape.top) % 2 == 0
            if not plus and len(raw) > 1:
                continue
        y = SchubertIndex(shape, tuple(sorted(A)), tuple(sorted(B)))
        terms.append((UNKNOWN, y))
    return FormalClassSum(tuple(terms))


def fiber_case(x, t):
    """'I' for a single term, 'II' for a split resolved by parity, 'III' for two terms."""
    if x.family == "A":
        return "I"
    if x.component == MINUS:
        x = spinor_involution(x)
    raw = fiber_terms_orthogonal(x, t)
    if len(raw) == 1:
        return "I"
    return "II" if x.shape.has_components else "III"
