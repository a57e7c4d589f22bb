"""Command-line front end.

All mathematical output is JSON on stdout (JSON lines for element lists,
single documents otherwise, each carrying a schema version field "v": 1);
human-readable summaries go to stderr.  Exit codes: 0 success, 1
mathematical verdict failure (e.g. a verify mismatch or a not-connected
certify), 2 usage or budget errors.  The environment variable CRG_BUDGET
overrides the default search budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canonical import CanonicalizationError, canonicalize_d1n
from .groups import GroupError, GroupParams
from .hurwitz import HurwitzError, apply_braid, invariant_multiset
from .lifting import LiftError, lift_factorization
from .orbits import (
    BudgetExceededError,
    NotConnectedError,
    orbit_bfs,
    same_orbit,
    verify_main_theorem,
)
from .reflections import class_label, coxeter_element, coxeter_number, enumerate_reflections
from .serialization import (
    braid_from_string,
    element_to_json,
    factorization_from_json,
    factorization_to_json,
)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _budget(args, default: int) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("CRG_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"bad CRG_BUDGET value {env!r}") from None
    return default


def _group(args) -> GroupParams:
    return GroupParams.parse(args.group)


def _load_factorization(path: str, params: GroupParams | None = None):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None
    return factorization_from_json(obj, params)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def cmd_reflections(args) -> int:
    params = _group(args)
    for r in enumerate_reflections(params):
        doc = {"v": 1, "kind": r.kind, "label": str(class_label(r, params))}
        doc.update(element_to_json(r.element))
        _emit(doc)
    return EXIT_OK


def cmd_coxeter(args) -> int:
    params = _group(args)
    c = coxeter_element(params)
    doc = {"v": 1, "group": str(params)}
    doc.update(element_to_json(c))
    _emit(doc)
    return EXIT_OK


def cmd_coxnum(args) -> int:
    params = _group(args)
    data = coxeter_number(params)
    _emit({"v": 1, "reflections": data.reflection_count,
           "hyperplanes": data.hyperplane_count, "h": data.h})
    return EXIT_OK


def cmd_act(args) -> int:
    f = _load_factorization(args.input)
    word = braid_from_string(args.braid)
    result = apply_braid(f, word)
    _emit(factorization_to_json(result))
    return EXIT_OK


def cmd_lift(args) -> int:
    params = _group(args) if args.group else None
    f = _load_factorization(args.input, params)
    lifted = lift_factorization(f)
    _emit(factorization_to_json(lifted))
    return EXIT_OK


def cmd_canonical(args) -> int:
    params = _group(args) if args.group else None
    f = _load_factorization(args.input, params)
    budget = _budget(args, 10**6)
    cf, word = canonicalize_d1n(f, args.mod, budget=budget)
    doc = factorization_to_json(cf.realize())
    doc["diag_weights"] = list(cf.diag_weights)
    doc["pair_count"] = cf.pair_count
    if args.emit_braid:
        doc["braid"] = word
    _emit(doc)
    return EXIT_OK


def cmd_orbit(args) -> int:
    f = _load_factorization(args.input)
    budget = _budget(args, 10**7)
    orbit = orbit_bfs(f, budget=budget, threads=args.threads)
    doc = {"v": 1, "group": str(f.params), "length": len(f), "orbit_size": len(orbit)}
    if args.stats:
        labels = sorted(str(label) for label in invariant_multiset(f).elements())
        doc["class_multiset"] = labels
    _emit(doc)
    return EXIT_OK


def cmd_certify(args) -> int:
    params = _group(args) if args.group else None
    f = _load_factorization(getattr(args, "from"), params)
    g = _load_factorization(args.to, params)
    budget = _budget(args, 10**7)
    try:
        word = same_orbit(f, g, budget=budget)
    except NotConnectedError:
        _emit({"v": 1, "connected": False})
        return EXIT_VERDICT
    _emit({"v": 1, "connected": True, "braid": word})
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _group(args)
    budget = _budget(args, 10**8)
    report = verify_main_theorem(params, args.length, enum_budget=budget,
                                 threads=args.threads)
    doc = report.to_json()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
    _emit(doc)
    print(f"group {params} length {args.length}: "
          f"{report.factorization_count} factorizations, "
          f"{report.orbit_count} orbits, "
          f"{report.class_multiset_count} class multisets, "
          f"match={report.match}", file=sys.stderr)
    return EXIT_OK if report.match else EXIT_VERDICT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crg",
        description="Reflection factorizations and the Hurwitz action in "
                    "the complex reflection groups G(d,1,n) and G(d,d,n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("reflections", cmd_reflections, help="list reflections with class labels")
    p.add_argument("--group", required=True)

    p = add("coxeter", cmd_coxeter, help="print the standard Coxeter element")
    p.add_argument("--group", required=True)

    p = add("coxnum", cmd_coxnum, help="reflection/hyperplane counts and h")
    p.add_argument("--group", required=True)

    p = add("act", cmd_act, help="apply a braid word to a factorization")
    p.add_argument("--input", required=True)
    p.add_argument("--braid", required=True)

    p = add("lift", cmd_lift, help="lift a Coxeter factorization to the generic cover")
    p.add_argument("--group")
    p.add_argument("--input", required=True)

    p = add("canonical", cmd_canonical, help="canonical Hurwitz-orbit representative")
    p.add_argument("--group")
    p.add_argument("--input", required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--emit-braid", action="store_true")
    p.add_argument("--budget", type=int)

    p = add("orbit", cmd_orbit, help="explore the Hurwitz orbit of a factorization")
    p.add_argument("--input", required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int)

    p = add("certify", cmd_certify, help="braid-word certificate between factorizations")
    p.add_argument("--group")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--budget", type=int)

    p = add("verify", cmd_verify, help="orbit vs class-multiset partition check")
    p.add_argument("--group", required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, GroupError, HurwitzError, LiftError,
            CanonicalizationError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
