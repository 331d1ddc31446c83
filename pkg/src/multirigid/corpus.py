"""Worked examples and the golden regression corpus."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .index_core import MINUS, PLUS, FlagShape, dimension, enumerate_indices, format_index, parse_index
from .rigidity_engine import classify_class, classify_subindex, essential_subindices
from .weyl_windows import index_to_window


@dataclass(frozen=True)
class WorkedExample:
    index: str
    status: str
    position: str | None = None  # None for a class verdict
    reason: str | None = None
    essential: bool | None = None  # set to test essentiality instead of a verdict


WORKED_EXAMPLES = (
    WorkedExample("A(n=4; d=2,3) a=1^1,2^1,4^2", "MultiRigid"),
    WorkedExample("A(n=4; d=2,3) a=1^1,2^1,4^2", "MultiRigid", "a:2"),
    WorkedExample("A(n=4; d=1,3) a=1^2,2^1,4^2", "MultiRigid", "a:2"),
    WorkedExample("A(n=5; d=2,3) a=1^1,4^1,5^2", "NotMultiRigid"),
    # sigma_{1..b, b+2..k; b} with a_s = k
    WorkedExample("OG(k=5,n=13) a=1,2,4,5 b=2", "MultiRigid", "a:4"),
    WorkedExample("OG(k=4,n=11) a=1,2,4 b=2", "NotMultiRigid", "a:3"),
    WorkedExample("OG(k=2,n=10) a=4 b=4", None, "a:1", essential=False),
    WorkedExample("OG(k=2,n=9) a=2 b=2", "Undetermined", None, "outside-theorems"),
    WorkedExample("OG(k=1,n=5) a=1", "MultiRigid"),
)


def check_worked_example(ex):
    """Return (ok, got) for one worked example."""
    x = parse_index(ex.index)
    if ex.essential is not None:
        got = essential_subindices(x).to_json()[ex.position]
        return got == ex.essential, got
    v = classify_class(x) if ex.position is None else classify_subindex(x, ex.position)
    ok = v.status == ex.status and (ex.reason is None or v.reason == ex.reason)
    return ok, v.to_json()


# golden corpus

CORPUS_MAX_N_A = 5
CORPUS_MAX_N_ORTH = 8


def corpus_shapes():
    out = []
    for n in range(2, CORPUS_MAX_N_A + 1):
        for k in range(1, n):
            for dims in itertools.combinations(range(1, n), k):
                out.append(FlagShape("A", n, dims))
    for n in range(3, CORPUS_MAX_N_ORTH + 1):
        fam = "B" if n % 2 else "D"
        m = n // 2
        for k in range(1, m + 1):
            for dims in itertools.combinations(range(1, m + 1), k):
                if fam == "D" and dims[-1] == m - 1:
                    continue
                out.append(FlagShape(fam, n, dims))
    return out


def corpus_indices():
    seen, out = set(), []
    for ex in WORKED_EXAMPLES:
        text = format_index(parse_index(ex.index))
        if text not in seen:
            seen.add(text)
            out.append(text)
    for shape in corpus_shapes():
        comps = (PLUS, MINUS) if shape.has_components else (PLUS,)
        for comp in comps:
            for x in enumerate_indices(shape, comp):
                text = format_index(x)
                if text not in seen:
                    seen.add(text)
                    out.append(text)
    return out


def corpus_record(text):
    x = parse_index(text)
    return {
        "index": format_index(x),
        "essential": essential_subindices(x).to_json(),
        "verdict": classify_class(x).to_json(),
        "dim": dimension(x),
        "window": str(index_to_window(x)),
    }


def dump_record(rec):
    return json.dumps(rec, sort_keys=True, ensure_ascii=True)


def corpus_text(indices=None):
    indices = corpus_indices() if indices is None else indices
    return "".join(dump_record(corpus_record(t)) + "\n" for t in indices)
