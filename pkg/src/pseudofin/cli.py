"""Command-line interface: ``pseudofin <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Optional

from . import metric
from .acts import act_of_semigroup, generated_congruence
from .constructions import e_of, extension, extension_by_constants, rees_matrix
from .core import DEFAULT_ORDER_CAP, FiniteSemigroup, opposite, random_transformation_monoid
from .errors import ParseError, PseudofinError, RangeError
from .io import (
    act_from_json,
    dumps,
    load_semigroup,
    read_json,
    semigroup_from_json,
    semigroup_to_json,
    spec_from_json,
)
from .metric import GenSet, distance_matrix, min_diameter
from .structure import RELATIONS, green, has_zero, kernel, predicates
from .theorems import SUITES, Instance, fixture_corpus, random_corpus, run_suite


def _budget(args) -> int:
    if args.budget is not None:
        if args.budget <= 0:
            raise RangeError("--budget must be positive")
        return args.budget
    env = os.environ.get("PSEUDOFIN_BUDGET")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise RangeError(f"PSEUDOFIN_BUDGET must be an integer, got {env!r}") from None
        if value <= 0:
            raise RangeError("PSEUDOFIN_BUDGET must be positive")
        return value
    return metric.DEFAULT_SEARCH_BUDGET


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(dumps(payload))
    else:
        print(text)


def _elements(S: FiniteSemigroup, spec: str) -> list:
    names = [p for p in spec.split(",") if p.strip()]
    if not names:
        raise RangeError("empty element list")
    return [S.index_of(p) for p in names]


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" + ("" if n == 1 else "es")


def _kernel_shape(S: FiniteSemigroup) -> str:
    kd = kernel(S)
    size = len(kd.kernel_elements)
    rees = kd.rees
    if rees is None:
        return f"kernel of size {size} (not completely simple)"
    I, J, g = rees.I_size, rees.J_size, rees.group_table.order
    if size == 1:
        shape = "zero"
    elif I == 1 and J == 1:
        shape = "group"
    elif g == 1 and I == 1:
        shape = "right zero"
    elif g == 1 and J == 1:
        shape = "left zero"
    elif g == 1:
        shape = "rectangular band"
    else:
        shape = "completely simple"
    return f"kernel {shape} of size {size} ({_count(I, 'R-class')}, {_count(J, 'L-class')}, group of order {g})"


# ---------------------------------------------------------------- commands


def cmd_info(args) -> int:
    S = load_semigroup(args.input, args.cap)
    g = green(S)
    p = predicates(S)
    zero = has_zero(S)
    counts = {rel: g.count(rel) for rel in RELATIONS}
    flags = [name.replace("_", "-") for name, v in vars(p).items() if v]
    kd = kernel(S)
    payload = {
        "order": S.order,
        "identity": None if S.identity is None else S.label(S.identity),
        "zero": None if zero is None else S.label(zero),
        "predicates": vars(p),
        "green_class_counts": counts,
        "kernel": {
            "elements": [S.label(x) for x in kd.kernel_elements],
            "completely_simple": kd.is_completely_simple,
            "R_classes": None if kd.rees is None else kd.rees.I_size,
            "L_classes": None if kd.rees is None else kd.rees.J_size,
            "group_order": None if kd.rees is None else kd.rees.group_table.order,
        },
    }
    lines = [
        f"order {S.order}, J-classes {counts['J']}, {_kernel_shape(S)}",
        "identity " + (S.label(S.identity) if S.is_monoid else "none") + ", " + ("zero present" if zero is not None else "no zero"),
        "Green class counts: " + ", ".join(f"{r} {c}" for r, c in counts.items()),
        "properties: " + (", ".join(flags) if flags else "none"),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _format_steps(A, report) -> list:
    if report.sequence is None:
        return ["no X-sequence joins the extremal pair"]
    S = A.semigroup
    a, b = report.pair
    if not report.sequence:
        return [f"{A.label(a)} = {A.label(b)} (length 0)"]
    lines = []
    cur = a
    for x, y, s in report.sequence:
        nxt = A.act(y, s)
        s_name = "1" if s is None else S.label(s)
        lines.append(f"{A.label(cur)} = {A.label(x)}·{s_name} | {A.label(y)}·{s_name} = {A.label(nxt)}")
        cur = nxt
    return lines


def cmd_diameter(args) -> int:
    S = load_semigroup(args.input, args.cap)
    side = "left" if args.left else "right"
    base = opposite(S) if args.left else S
    A = act_of_semigroup(base)
    if args.set is not None:
        X = GenSet(tuple(_elements(S, args.set)))
        note = None
    else:
        best = min_diameter(A, args.min_size, budget=_budget(args))
        if best.genset is None:
            payload = {"side": side, "min_size": args.min_size, "diameter": None, "genset": None}
            _emit(args, payload, f"no generating set of size <= {args.min_size}: {side} diameter infinite")
            return 0
        X = best.genset
        note = f"least {side} X-diameter over |X| <= {args.min_size}"
    report = distance_matrix(A, X)
    if report.sequence is not None and not metric.validate_sequence(A, X, *report.pair, report.sequence):
        raise PseudofinError("internal error: witness sequence failed re-validation")
    payload = report.to_json()
    payload["side"] = side
    payload["genset"]["labels"] = [S.label(x) for x in X.members]
    payload["witness"]["pair_labels"] = [S.label(x) for x in report.pair]
    diam = "infinite" if math.isinf(report.diameter) else str(report.diameter)
    lines = [f"{side} X-diameter {diam} for X = {{{', '.join(S.label(x) for x in X.members)}}}"]
    if note:
        lines.append(note)
    a, b = report.pair
    lines.append(f"extremal pair ({S.label(a)}, {S.label(b)}):")
    lines += ["  " + s for s in _format_steps(A, report)]
    _emit(args, payload, "\n".join(lines))
    return 0


def _parse_pairs(S_or_A, text: str, resolve) -> list:
    pairs = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        if ":" not in chunk:
            raise RangeError(f"pair {chunk!r} must be written a:b")
        a, b = chunk.split(":", 1)
        pairs.append((resolve(a), resolve(b)))
    return pairs


def cmd_congruence(args) -> int:
    if args.act:
        A = act_from_json(read_json(args.act))

        def resolve(name):
            try:
                idx = int(name)
            except ValueError:
                raise RangeError(f"act points are indices, got {name!r}") from None
            if not 0 <= idx < A.carrier_size:
                raise RangeError(f"point {idx} outside the carrier")
            return idx
    else:
        if not args.input:
            raise RangeError("give a semigroup file or --act")
        S = load_semigroup(args.input, args.cap)
        A = act_of_semigroup(S)
        resolve = S.index_of
    pairs = _parse_pairs(A, args.pairs, resolve)
    rho = generated_congruence(A, pairs)
    classes = rho.classes()
    payload = {"classes": [[A.label(x) for x in c] for c in classes], "universal": rho.is_universal}
    text = f"{len(classes)} classes: " + " ".join("{" + ",".join(A.label(x) for x in c) + "}" for c in classes)
    _emit(args, payload, text)
    return 0


def cmd_green(args) -> int:
    S = load_semigroup(args.input, args.cap)
    g = green(S)
    payload = {rel: [[S.label(x) for x in c] for c in g.classes(rel)] for rel in RELATIONS}
    payload["D_equals_J"] = g.d_equals_j
    lines = [f"{rel}: " + " ".join("{" + ",".join(S.label(x) for x in c) + "}" for c in g.classes(rel)) for rel in RELATIONS]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_kernel(args) -> int:
    S = load_semigroup(args.input, args.cap)
    kd = kernel(S)
    payload = {
        "elements": [S.label(x) for x in kd.kernel_elements],
        "completely_simple": kd.is_completely_simple,
        "minimal_left_ideals": [[S.label(x) for x in c] for c in kd.minimal_left_ideals],
        "minimal_right_ideals": [[S.label(x) for x in c] for c in kd.minimal_right_ideals],
    }
    lines = [_kernel_shape(S), "elements: {" + ",".join(S.label(x) for x in kd.kernel_elements) + "}"]
    if kd.rees is not None:
        r = kd.rees
        payload["rees"] = {
            "idempotent": S.label(r.idempotent),
            "I_size": r.I_size,
            "J_size": r.J_size,
            "group": semigroup_to_json(r.group_table),
            "P": r.P.tolist(),
            "coordinates": {S.label(x): list(c) for x, c in sorted(r.iso.items())},
        }
        lines.append(f"Rees coordinates from idempotent {S.label(r.idempotent)}: P = {r.P.tolist()}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_construct(args) -> int:
    obj = read_json(args.spec)
    if not isinstance(obj, dict):
        raise ParseError("construction spec must be a JSON object")
    if args.kind == "rees":
        T = semigroup_from_json(obj.get("T"))
        built = rees_matrix(T, obj.get("I_size", 0), obj.get("J_size", 0), obj.get("P"))
    elif args.kind == "extension":
        built = extension(spec_from_json(obj))
    elif args.kind == "e-of":
        S = semigroup_from_json(obj.get("S"))
        x = S.index_of(obj.get("x", 0))
        Y = obj.get("Y")
        built = e_of(S, x, None if Y is None else [S.index_of(y) for y in Y])
    else:
        built = extension_by_constants(semigroup_from_json(obj.get("S")))
    M = built.semigroup
    payload = semigroup_to_json(M)
    if args.format == "json" or args.output:
        text = dumps(payload)
    else:
        text = f"order {M.order}, " + ("monoid" if M.is_monoid else "no identity") + "\n" + dumps(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.output} (order {M.order})")
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    corpus = [] if args.no_fixtures else fixture_corpus()
    if args.random:
        corpus += random_corpus(args.random, args.seed, args.degree, cap=args.cap)
    for path in args.input or []:
        corpus.append(Instance(os.path.basename(path), load_semigroup(path, args.cap)))
    report = run_suite(suites, corpus, dump_dir=args.dump_dir, include_constructions=not args.no_fixtures)
    payload = report.to_json()
    failures = report.failures()
    lines = [f"{len(report.entries)} checks, {payload['applicable']} applicable, {len(failures)} failed"]
    for entry in report.entries:
        notes = f" [{'; '.join(entry.notes)}]" if entry.notes else ""
        if not entry.report.applicable:
            continue
        if entry.report.passed and not args.verbose:
            continue
        status = "PASS" if entry.report.passed else "FAIL"
        lines.append(f"{status} {entry.report.theorem_id} {entry.report.instance}: measured {entry.report.measured}"
                     f", bound {entry.report.bound}{notes}" + (f" (dumped to {entry.dump})" if entry.dump else ""))
    lifted = sorted({e.report.instance for e in report.entries if e.notes})
    for name in lifted:
        lines.append(f"note: {name}: identity adjoined before checking")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_random(args) -> int:
    S = random_transformation_monoid(args.degree, args.gens, args.seed, cap=args.cap)
    payload = semigroup_to_json(S)
    _emit(args, payload, dumps(payload))
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="order cap for generated semigroups")
    common.add_argument("--budget", type=int, default=None, help="search budget (overrides PSEUDOFIN_BUDGET)")

    parser = argparse.ArgumentParser(prog="pseudofin", description="Finite semigroups, right acts and X-diameters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="summary of a semigroup")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("diameter", parents=[common], help="X-diameter with a witness sequence")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", help="comma-separated element names or indices")
    group.add_argument("--min-size", type=int, help="minimise over generating sets of this size or less")
    p.add_argument("--left", action="store_true", help="use the left action")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("congruence", parents=[common], help="right congruence generated by pairs")
    p.add_argument("input", nargs="?")
    p.add_argument("--pairs", required=True, help="comma-separated a:b pairs")
    p.add_argument("--act", help="act JSON file instead of the semigroup acting on itself")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("green", parents=[common], help="Green's classes")
    p.add_argument("input")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("kernel", parents=[common], help="kernel and its Rees coordinates")
    p.add_argument("input")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("construct", parents=[common], help="build a semigroup from a spec file")
    p.add_argument("kind", choices=("rees", "extension", "e-of", "constants"))
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="run theorem checks")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--random", type=int, default=0, help="number of random monoids to add")
    p.add_argument("--degree", type=int, default=None, help="fixed degree for random monoids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", action="append", help="extra semigroup file (repeatable)")
    p.add_argument("--no-fixtures", action="store_true", help="skip the built-in fixtures")
    p.add_argument("--dump-dir", default="pseudofin-failures", help="where failing instances are written")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="random transformation monoid as table JSON")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gens", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap <= 0:
        print("error: --cap must be positive", file=sys.stderr)
        return 2
    saved = metric.EDGE_BUDGET
    try:
        if args.budget is not None or os.environ.get("PSEUDOFIN_BUDGET"):
            metric.EDGE_BUDGET = _budget(args)
        return args.func(args)
    except PseudofinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        metric.EDGE_BUDGET = saved


if __name__ == "__main__":
    sys.exit(main())
