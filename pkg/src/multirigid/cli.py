"""Command-line front end.  Every command prints one JSON record per line.

Exit codes: 0 success (including "invalid" validation reports), 1 input
error or usage, 2 a violated invariant found by selftest or corpus-check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import calculus_oracle as oracle
from .class_flow import fiber_case, fiber_class, pushforward
from .corpus import WORKED_EXAMPLES, check_worked_example, corpus_record, dump_record
from .errors import IndexSyntaxError, SchubertError
from .index_core import (
    MINUS,
    PLUS,
    dimension,
    dual,
    enumerate_indices,
    format_index,
    parse_index,
    parse_shape,
    spinor_involution,
)
from .rigidity_engine import (
    MR,
    RigidityHints,
    classify_class,
    classify_subindex,
    essential_subindices,
)
from .root_geometry import context_for_shape, essential_roots, ordering_condition, stabilizer_simple_roots
from .weyl_windows import index_to_window, parse_window, window_to_index

OK, INPUT_ERROR, VIOLATION = 0, 1, 2


@dataclass
class CommandResult:
    exit_code: int
    records: list = field(default_factory=list)

    def lines(self):
        return [r if isinstance(r, str) else dump_record(r) for r in self.records]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser():
    p = _Parser(prog="multirigid", description="Schubert index toolkit with JSON-lines output.")
    sub = p.add_subparsers(dest="command")

    def with_index(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("index")
        return c

    with_index("validate", "check an index against its invariants")
    with_index("essential", "essential sub-indices")
    c = with_index("classify", "multi-rigidity verdict for a class or one sub-index")
    c.add_argument("--sub", help="position a:i or b:j")
    c.add_argument("--assume-rigid", default="", help="comma separated positions asserted rigid")
    with_index("pushforward", "image under projection to the first t steps").add_argument("--t", type=int, required=True)
    with_index("fiber", "class of the general fiber over the t-th projection").add_argument("--t", type=int, required=True)
    with_index("dual", "image under the duality of type A flags")
    with_index("spinor-involution", "swap the two spinor components")
    with_index("to-weyl", "minimal coset representative window")
    c = sub.add_parser("from-weyl", help="index of a minimal window")
    c.add_argument("window")
    c.add_argument("--shape", required=True)
    c.add_argument("--comp", choices=[PLUS, MINUS], default=PLUS)
    with_index("dim", "dimension of the Schubert variety")
    c = sub.add_parser("enumerate", help="all indices on a shape")
    c.add_argument("shape")
    c.add_argument("--filter", choices=["multirigid", "essential"])
    c.add_argument("--comp", choices=[PLUS, MINUS], default=PLUS)
    c.add_argument("--budget", type=int, default=None, help="maximum number of indices")
    with_index("essential-roots", "essential simple roots of the window")
    with_index("ordering-condition", "ordering of projections with nested essential sets")
    c = sub.add_parser("product", help="Grassmannian product of two type-A single-step classes")
    c.add_argument("left")
    c.add_argument("right")
    c = sub.add_parser("selftest", help="run the consistency sweep and oracle checks")
    c.add_argument("--budget", default=None, help="e.g. a=5,orth=8,k=2")
    c = sub.add_parser("corpus-check", help="compare a golden corpus file with fresh output")
    c.add_argument("file")
    return p


def _hints(text):
    return RigidityHints(frozenset(p for p in text.split(",") if p.strip()))


def _cmd_validate(args):
    try:
        x = parse_index(args.index)
    except IndexSyntaxError:
        raise
    except SchubertError as exc:
        return CommandResult(OK, [{"valid": False, "error": exc.kind, "message": str(exc)}])
    return CommandResult(OK, [{"valid": True, "index": format_index(x)}])


def _cmd_essential(args):
    x = parse_index(args.index)
    rep = essential_subindices(x)
    return CommandResult(OK, [{"index": format_index(x), "essential": rep.to_json(), "positions": rep.essential_positions()}])


def _cmd_classify(args):
    x = parse_index(args.index)
    hints = _hints(args.assume_rigid)
    v = classify_class(x, hints) if args.sub is None else classify_subindex(x, args.sub, hints)
    rec = {"index": format_index(x)}
    rec.update(v.to_json())
    return CommandResult(OK, [rec])


def _cmd_pushforward(args):
    x = parse_index(args.index)
    y = pushforward(x, args.t)
    return CommandResult(OK, [{"index": format_index(x), "t": args.t, "pushforward": format_index(y), "dim": dimension(y)}])


def _cmd_fiber(args):
    x = parse_index(args.index)
    f = fiber_class(x, args.t)
    rec = {"index": format_index(x), "t": args.t, "case": fiber_case(x, args.t), "fiber": f.to_json()}
    return CommandResult(OK, [rec])


def _cmd_dual(args):
    x = parse_index(args.index)
    return CommandResult(OK, [{"index": format_index(x), "dual": format_index(dual(x))}])


def _cmd_spinor(args):
    x = parse_index(args.index)
    return CommandResult(OK, [{"index": format_index(x), "image": format_index(spinor_involution(x))}])


def _cmd_to_weyl(args):
    x = parse_index(args.index)
    return CommandResult(OK, [{"index": format_index(x), "window": str(index_to_window(x))}])


def _cmd_from_weyl(args):
    shape = parse_shape(args.shape)
    w = parse_window(args.window, shape.family, shape.n)
    x = window_to_index(w, shape, args.comp)
    return CommandResult(OK, [{"window": str(w), "index": format_index(x)}])


def _cmd_dim(args):
    x = parse_index(args.index)
    return CommandResult(OK, [{"index": format_index(x), "dim": dimension(x)}])


def _cmd_enumerate(args):
    shape = parse_shape(args.shape)
    out = []
    for x in enumerate_indices(shape, args.comp, args.budget):
        if args.filter == "multirigid" and classify_class(x).status != MR:
            continue
        if args.filter == "essential" and not essential_subindices(x).essential_positions():
            continue
        out.append({"index": format_index(x)})
    return CommandResult(OK, out)


def _cmd_essential_roots(args):
    x = parse_index(args.index)
    w = index_to_window(x)
    ctx = context_for_shape(x.shape)
    rec = {
        "index": format_index(x),
        "window": str(w),
        "essential_roots": sorted(essential_roots(w, ctx)),
        "stabilizer_roots": sorted(stabilizer_simple_roots(w, ctx)),
    }
    return CommandResult(OK, [rec])


def _cmd_ordering(args):
    x = parse_index(args.index)
    ok, order = ordering_condition(index_to_window(x), context_for_shape(x.shape))
    return CommandResult(OK, [{"index": format_index(x), "holds": ok, "witness": order}])


def _grassmannian_args(x):
    if x.family != "A" or x.shape.k != 1:
        raise IndexSyntaxError("product takes single-step type A indices")
    return x.shape.top, x.n


def _cmd_product(args):
    x, y = parse_index(args.left), parse_index(args.right)
    kx, ky = _grassmannian_args(x), _grassmannian_args(y)
    if kx != ky:
        raise IndexSyntaxError("both factors must live in the same Grassmannian")
    k, n = kx
    p = oracle.lr_product(x, y, k, n)
    return CommandResult(OK, [{"left": format_index(x), "right": format_index(y), "product": p.to_json()}])


def _parse_budget(text):
    if text is None:
        return oracle.DEFAULT_BUDGET
    keys = {"a": "max_n_a", "orth": "max_n_orth", "k": "max_k_orth"}
    vals = {}
    for part in text.split(","):
        if not part.strip():
            continue
        key, _, val = part.partition("=")
        if key.strip() not in keys or not val.strip().isdigit():
            raise IndexSyntaxError(f"bad budget field {part!r}; use a=N,orth=N,k=N")
        vals[keys[key.strip()]] = int(val)
    return oracle.SweepBudget(**vals)


def _cmd_selftest(args):
    budget = _parse_budget(args.budget)
    report = []
    for ex in WORKED_EXAMPLES:
        ok, got = check_worked_example(ex)
        if not ok:
            report.append({"check": "worked-example", "input": ex.index, "expected": ex.status, "got": got})
    report += oracle.consistency_sweep(budget)
    if not budget.empty:
        report += oracle.oracle_violations(max_k=2, max_n=5, max_n_vanishing=6)
    summary = {"selftest": "ok" if not report else "fail", "violations": len(report)}
    return CommandResult(VIOLATION if report else OK, report + [summary])


def _cmd_corpus_check(args):
    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IndexSyntaxError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        lines = data.decode("ascii").splitlines()
        indices = [json.loads(line)["index"] for line in lines]
    except (UnicodeDecodeError, ValueError, KeyError, TypeError):
        raise IndexSyntaxError("corpus must be ASCII JSON lines with an index field") from None
    fresh = "".join(dump_record(corpus_record(t)) + "\n" for t in indices).encode("ascii")
    mismatches = [i + 1 for i, (old, new) in enumerate(zip(data.splitlines(), fresh.splitlines())) if old != new]
    match = fresh == data
    rec = {"corpus": args.file, "records": len(indices), "match": match, "mismatched_lines": mismatches[:20]}
    return CommandResult(OK if match else VIOLATION, [rec])


COMMANDS = {
    "validate": _cmd_validate,
    "essential": _cmd_essential,
    "classify": _cmd_classify,
    "pushforward": _cmd_pushforward,
    "fiber": _cmd_fiber,
    "dual": _cmd_dual,
    "spinor-involution": _cmd_spinor,
    "to-weyl": _cmd_to_weyl,
    "from-weyl": _cmd_from_weyl,
    "dim": _cmd_dim,
    "enumerate": _cmd_enumerate,
    "essential-roots": _cmd_essential_roots,
    "ordering-condition": _cmd_ordering,
    "product": _cmd_product,
    "selftest": _cmd_selftest,
    "corpus-check": _cmd_corpus_check,
}


def run(argv):
    parser = _parser()
    if not argv:
        return CommandResult(INPUT_ERROR, [parser.format_usage().strip()])
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(INPUT_ERROR, [{"error": "Usage", "message": str(exc)}, parser.format_usage().strip()])
    except SystemExit as exc:  # --help
        return CommandResult(OK if not exc.code else INPUT_ERROR, [])
    if args.command is None:
        return CommandResult(INPUT_ERROR, [parser.format_usage().strip()])
    try:
        return COMMANDS[args.command](args)
    except SchubertError as exc:
        return CommandResult(INPUT_ERROR, [exc.as_record()])


def main(argv=None):
    res = run(sys.argv[1:] if argv is None else argv)
    for line in res.lines():
        print(line)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
