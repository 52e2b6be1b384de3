"""Command-line interface: ``cordrep {relations,solve,report,markov}``.

Every command prints one JSON document with a top-level ``schema`` field.
Exit status is 0 on success, 1 when a checked property fails and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional

from .augment import (Augmentation, AugmentationError, enumerate_fp,
                      mu_lambda_points, verify)
from .braid import BraidParseError, BraidWord, components, format_braid, parse_braid
from .fields import FieldError, is_prime
from .markov import apply_move, check_intertwiner, fuzz, random_start_pairs
from .props import (check_vanishing, is_microlocally_simple,
                    separability_any_order, two_partitions)
from .relations import all_relations
from .rep import RepError, build_rep, check_link_relations


class UsageError(Exception):
    pass


def _dump(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _braid(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except BraidParseError as e:
        raise UsageError(str(e)) from e


def _load_aug(path: str) -> Augmentation:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read augmentation {path}: {e}") from e
    if isinstance(doc, dict) and "solutions" in doc:
        # accept the first solution of a ``solve`` result
        if not doc["solutions"]:
            raise UsageError("solution file holds no augmentations")
        doc = doc["solutions"][0]
    try:
        return Augmentation.from_json(doc)
    except AugmentationError as e:
        raise UsageError(str(e)) from e


def _checked(b: BraidWord, a: Augmentation):
    cm = components(b)
    try:
        a.check(cm)
    except AugmentationError as e:
        raise UsageError(str(e)) from e
    return cm


# ------------------------------------------------------------ commands

def cmd_relations(args) -> int:
    b = _braid(args.braid)
    _dump(all_relations(b).to_json(), args.out)
    return 0


def cmd_solve(args) -> int:
    b = _braid(args.braid)
    if not is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    fix = None
    if args.fix:
        try:
            fix = json.loads(args.fix)
            fix = {"mu": list(fix["mu"]), "lambda": list(fix["lambda"])}
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise UsageError(f'--fix expects {{"mu": [...], "lambda": [...]}}: {e}') from e
    if args.budget is not None and args.budget < 0:
        raise UsageError("--budget must be non-negative")
    rels = all_relations(b)
    try:
        res = enumerate_fp(rels, args.p, fix=fix, budget=args.budget, jobs=args.jobs)
    except AugmentationError as e:
        raise UsageError(str(e)) from e
    doc = {
        "schema": "cordrep.solutions/1",
        "braid": format_braid(b),
        "field": {"field": "Fp", "p": args.p},
        "complete": res.complete,
        "evaluated": res.evaluated,
        "space": res.space,
        "count": len(res.solutions),
        "mu_lambda_points": [list(pt) for pt in mu_lambda_points(res.solutions)],
        "solutions": [a.to_json() for a in res.solutions],
    }
    _dump(doc, args.out)
    return 0


def build_report(b: BraidWord, a: Augmentation) -> dict:
    cm = components(b)
    rels = all_relations(b)
    ver = verify(rels, a)
    doc = {"schema": "cordrep.report/1", "braid": format_braid(b),
           "augmentation": a.to_json(), "verify": ver.to_json(), "ok": ver.ok}
    if not ver.ok:
        return doc
    rep = build_rep(a, cm)
    link = check_link_relations(rep, b)
    simple = is_microlocally_simple(rep)
    subsets = [list(c) for k in range(1, cm.r + 1) for c in itertools.combinations(range(1, cm.r + 1), k)]
    van = [check_vanishing(a, rep, c) for c in subsets]
    sep = [separability_any_order(b, a, k1) for k1 in two_partitions(cm.r)]
    doc["rep"] = rep.to_json()
    doc["link_relations"] = link.to_json()
    doc["microlocally_simple"] = simple.to_json(a.field)
    doc["vanishing"] = [v.to_json() for v in van]
    doc["separability"] = [s.to_json() for s in sep]
    doc["ok"] = (link.ok and simple.ok and all(v.holds for v in van) and all(s.holds for s in sep))
    return doc


def cmd_report(args) -> int:
    b = _braid(args.braid)
    a = _load_aug(args.augmentation)
    _checked(b, a)
    doc = build_report(b, a)
    _dump(doc, args.out)
    return 0 if doc["ok"] else 1


def cmd_markov(args) -> int:
    if args.fuzz is not None:
        if args.fuzz < 0:
            raise UsageError("--fuzz must be non-negative")
        if args.braid and args.augmentation:
            b = _braid(args.braid)
            a = _load_aug(args.augmentation)
            _checked(b, a)
            starts = [(b, a)]
        elif args.braid:
            b = _braid(args.braid)
            starts = [(b, a) for a in enumerate_fp(all_relations(b), args.p).solutions]
        else:
            starts = random_start_pairs(args.seed, args.p)
        res = fuzz(starts, args.fuzz, args.seed, length=args.length, max_n=args.max_n)
        doc = {"schema": "cordrep.markov-fuzz/1", "seed": args.seed, "p": args.p,
               "starts": len(starts)}
        doc.update(res.to_json())
        _dump(doc, args.out)
        return 0 if res.ok else 1
    if not (args.braid and args.augmentation and args.moves):
        raise UsageError("markov needs BRAID AUGMENTATION MOVE... or --fuzz N")
    b = _braid(args.braid)
    a = _load_aug(args.augmentation)
    _checked(b, a)
    ok = True
    steps = []
    for mv in args.moves:
        try:
            rec = apply_move(b, a, mv)
        except ValueError as e:
            raise UsageError(str(e)) from e
        rep = check_intertwiner(rec)
        steps.append({"move": mv, "record": rec.to_json(), "check": rep.to_json()})
        ok = ok and rep.ok
        b, a = rec.target, rec.target_aug
    _dump({"schema": "cordrep.markov/1", "ok": ok, "steps": steps}, args.out)
    return 0 if ok else 1


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cordrep", description="Augmentations and their link group representations.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("relations", help="print the relation set of a braid closure")
    r.add_argument("braid", help='braid word, e.g. "n=2; 1 1"')
    r.add_argument("--out")
    r.set_defaults(func=cmd_relations)

    s = sub.add_parser("solve", help="enumerate all F_p augmentations")
    s.add_argument("braid")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--fix", help='pin units: \'{"mu": [2], "lambda": [3]}\'')
    s.add_argument("--budget", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    rp = sub.add_parser("report", help="representation and property report for one augmentation")
    rp.add_argument("braid")
    rp.add_argument("augmentation", help="augmentation JSON (or a solve output: first solution)")
    rp.add_argument("--out")
    rp.set_defaults(func=cmd_report)

    m = sub.add_parser("markov", help="apply Markov moves and check the intertwiners")
    m.add_argument("braid", nargs="?")
    m.add_argument("augmentation", nargs="?")
    m.add_argument("moves", nargs="*", help="conj:S, conjinv:S, stab+ or stab-")
    m.add_argument("--fuzz", type=int)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--p", type=int, default=3)
    m.add_argument("--length", type=int, default=3)
    m.add_argument("--max-n", dest="max_n", type=int, default=4)
    m.add_argument("--out")
    m.set_defaults(func=cmd_markov)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FieldError, RepError) as e:
        print(f"cordrep: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
