"""Acceptance criteria.  Each test prints one PASS/FAIL line with its runtime.

Run directly (``python3 tests/test_acceptance.py``) or through pytest.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import all_indices, orthogonal_shapes, type_a_shapes  # noqa: E402
from multirigid.calculus_oracle import (  # noqa: E402
    dual_pairing,
    grassmannian_indices,
    lr_product,
    point_coefficient,
    vanishing_instances,
)
from multirigid.class_flow import fiber_class, fiber_terms_orthogonal, pushforward  # noqa: E402
from multirigid.corpus import WORKED_EXAMPLES, check_worked_example  # noqa: E402
from multirigid.index_core import dimension, dual, enumerate_indices, format_index, of_shape, og_shape  # noqa: E402
from multirigid.rigidity_engine import (  # noqa: E402
    OUTSIDE,
    RIGIDITY_UNKNOWN,
    UNDETERMINED,
    RigidityHints,
    classify_class,
    classify_subindex,
    essential_subindices,
)
from multirigid.root_geometry import context_for_shape, essential_roots  # noqa: E402
from multirigid.weyl_windows import index_to_window, window_to_index  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "data" / "golden_corpus.jsonl"


def _shapes():
    return list(type_a_shapes(6)) + list(orthogonal_shapes(10, max_k=3))


def _emit(number, title, failures, elapsed, limit=None):
    ok = not failures and (limit is None or elapsed < limit)
    budget = f" (limit {limit}s)" if limit else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{elapsed:.2f}s{budget}]"
    if failures:
        line += f" first failure: {failures[0]}"
    return ok, line


@pytest.fixture
def report(capsys):
    def out(number, title, failures, elapsed, limit=None):
        ok, line = _emit(number, title, failures, elapsed, limit)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return out


def criterion_worked_examples():
    fails = []
    for ex in WORKED_EXAMPLES:
        ok, got = check_worked_example(ex)
        if not ok:
            fails.append((ex.index, ex.position, got))
    return fails


def criterion_round_trip():
    fails = []
    for shape in _shapes():
        for x in all_indices(shape):
            y = window_to_index(index_to_window(x), shape, x.component)
            if y != x:
                fails.append((format_index(x), format_index(y)))
    return fails


def criterion_conservation():
    fails, splits_on_eight = [], 0
    for shape in _shapes():
        for x in all_indices(shape):
            d = dimension(x)
            for t in range(1, shape.k + 1):
                base = dimension(pushforward(x, t))
                for y in fiber_class(x, t).indices():
                    if dimension(y) + base != d:
                        fails.append((format_index(x), t, format_index(y)))
                if shape == of_shape(8, (1, 2)) and len(fiber_terms_orthogonal(x, t)) > 1:
                    splits_on_eight += 1
    if not splits_on_eight:
        fails.append("no split in the two-step family on n = 8")
    return fails


def criterion_calibration():
    fails = []
    for shape in type_a_shapes(6):
        ctx = context_for_shape(shape)
        for x in all_indices(shape):
            got = essential_roots(index_to_window(x), ctx)
            want = {x.entry(p)[0] for p in essential_subindices(x).essential_positions()}
            if got != want:
                fails.append((format_index(x), sorted(want), sorted(got)))
    return fails


def criterion_duality():
    fails = []
    for shape in type_a_shapes(6):
        for x in all_indices(shape):
            y = dual(x)
            if dual(y) != x:
                fails.append(("involution", format_index(x)))
            if classify_class(x).status != classify_class(y).status:
                fails.append(("verdict", format_index(x), format_index(y)))
    return fails


def criterion_oracle():
    fails = []
    got = lr_product((2, 4), (2, 4), 2, 4).to_json()
    if got != [{"co": 1, "index": "A(n=4; d=2) a=1,4"}, {"co": 1, "index": "A(n=4; d=2) a=2,3"}]:
        fails.append(("square", got))
    for n in range(2, 8):
        for k in range(1, min(3, n - 1) + 1):
            for a in grassmannian_indices(k, n):
                pc = point_coefficient(lr_product(a, dual_pairing(a, k, n), k, n), k)
                if pc != 1:
                    fails.append(("pairing", k, n, a, pc))
    for n in range(2, 9):
        for k in range(1, min(3, n - 1) + 1):
            for a, c, _ in vanishing_instances(k, n):
                p = lr_product(a, c, k, n)
                if len(p):
                    fails.append(("vanishing", k, n, a, c))
    return fails


def _is_sigma_22(x):
    return x.shape.top == 2 and x.a_values == (2,) and x.b_values == (2,)


def criterion_totality():
    fails = []
    for shape in type_a_shapes(6):
        for x in all_indices(shape):
            if classify_class(x).status == UNDETERMINED:
                fails.append(("type A undetermined", format_index(x)))
    for n in range(3, 14, 2):
        for k in range(1, n // 2 + 1):
            for x in enumerate_indices(og_shape(k, n)):
                if _is_sigma_22(x):
                    # proved by an argument outside the classification rules
                    continue
                v = classify_class(x)
                if v.status == UNDETERMINED:
                    if v.reason != RIGIDITY_UNKNOWN:
                        fails.append(("reason", format_index(x), v.reason))
                    for p in essential_subindices(x).essential_positions():
                        s = classify_subindex(x, p)
                        if s.status == UNDETERMINED and (s.reason != RIGIDITY_UNKNOWN or not p.startswith("b:") or p == "b:1"):
                            fails.append(("position", format_index(x), p))
                hinted = classify_class(x, RigidityHints(frozenset(x.positions())))
                if hinted.status == UNDETERMINED and hinted.reason == OUTSIDE:
                    fails.append(("hinted", format_index(x)))
    return fails


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "multirigid.cli", *argv], capture_output=True, text=True, cwd=ROOT)


def criterion_cli():
    fails = []
    st = _cli("selftest")
    if st.returncode != 0:
        fails.append(("selftest", st.returncode, st.stdout[-200:]))
    cc = _cli("corpus-check", str(CORPUS))
    if cc.returncode != 0 or not json.loads(cc.stdout)["match"]:
        fails.append(("corpus-check", cc.stdout))
    bad = _cli("classify", "A(n=4; d=2,3 a=1^1")
    try:
        rec = json.loads(bad.stdout)
    except ValueError:
        rec = {}
    if bad.returncode != 1 or "error" not in rec:
        fails.append(("malformed", bad.returncode, bad.stdout))
    return fails


CRITERIA = [
    (1, "worked examples reproduce exactly", criterion_worked_examples, 1),
    (2, "window/index round trip, A n<=6, orthogonal n<=10 k<=3", criterion_round_trip, 30),
    (3, "dimension conservation of every fiber term", criterion_conservation, 60),
    (4, "essential roots match essential sub-indices, A n<=6", criterion_calibration, None),
    (5, "duality is an involution and preserves verdicts, A n<=6", criterion_duality, None),
    (6, "Grassmannian product oracle", criterion_oracle, 60),
    (7, "classification totality", criterion_totality, None),
    (8, "command line selftest, corpus and error handling", criterion_cli, None),
]


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, fn, limit, report):
    start = time.perf_counter()
    fails = fn()
    report(number, title, fails, time.perf_counter() - start, limit)


if __name__ == "__main__":
    all_ok = True
    for number, title, fn, limit in CRITERIA:
        start = time.perf_counter()
        fails = fn()
        ok, line = _emit(number, title, fails, time.perf_counter() - start, limit)
        all_ok &= ok
        print(line)
    sys.exit(0 if all_ok else 1)
