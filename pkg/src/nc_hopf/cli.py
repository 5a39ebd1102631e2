"""Command-line front end.

Grammar: ``nc-hopf <command> <subject> [flags]``.  All numeric output is
exact (rationals as ``p/q``, polynomials in canonical monomial order), and
identical invocations produce byte-identical output so the results can be
kept as golden files.

Exit status: 0 on success, 1 on a domain error (bad partition, failed
verification, ...), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coefficients import coeff_str
from .config import default_truncation
from .errors import NcHopfError
from .partitions import (
    NonCrossingPartition,
    admissible_splits,
    enumerate_nc_partitions,
    enumerate_set_partitions,
    moebius,
    parse_partition,
)
from .tensor import (
    DecoratedNC,
    barword_text,
    delta_nc,
    delta_word,
    parse_word,
    tensor_text,
)
from .transforms import (
    CLASSICAL,
    FREE,
    classical_cumulants_from_moments,
    classical_moments_from_cumulants,
    cumulant_sequence_from_json,
    free_cumulants_from_moments,
    free_moments_from_cumulants,
    generalized_free_cumulants,
    moment_sequence_from_json,
    multi_moment_map_from_json,
    symbolic_cumulants,
    symbolic_moments,
)
from .trees import (
    hierarchy_tree,
    parse_tree,
    tree_coproduct,
    tree_tensor_text,
    tree_text,
    tree_to_json,
)
from .verify import run_suite

# accepted shorthand for suite names
_SUITE_ALIASES = {
    "coassoc": "coassociativity",
    "characters": "character-bijection",
}

# which keyword the size bound maps to, per suite
_SUITE_SIZE_PARAM = {
    "counting": "max_n",
    "coassociativity": "max_degree",
    "unshuffle": "max_degree",
    "halfshuffle": "max_degree",
    "sp-morphism": "max_word_len",
    "character-bijection": "truncation",
    "keyrell": "max_n",
    "roundtrip": "order",
    "semicircular": "order",
    "tree-consistency": "max_n",
    "moebius": "max_n",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nc-hopf",
        description="Exact combinatorics of non-crossing partitions, "
                    "unshuffle bialgebras, and moment-cumulant transforms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count partitions")
    p.add_argument("lattice", choices=["nc", "set"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("coproduct", help="coproduct of one generator")
    p.add_argument("kind", choices=["nc", "word", "tree"])
    p.add_argument("subject", help='e.g. "{1,4}{2,3}", "a.b.c", "(()())"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("moebius", help="Möbius function of an interval")
    p.add_argument("lattice", choices=["nc", "set"])
    p.add_argument("lo")
    p.add_argument("hi")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("transform", help="moment/cumulant transforms")
    p.add_argument("flavor", choices=["classical", "free"])
    p.add_argument("--direction", required=True,
                   choices=["c2m", "m2c", "k2m", "m2k", "multi-m2k"])
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--n", type=int, default=None, help="truncation order")
    p.add_argument("--in", dest="infile", default=None,
                   help="JSON sequence or moment-table file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("split", help="admissible splits of a partition")
    p.add_argument("subject")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tree", help="hierarchy tree of a partition")
    p.add_argument("subject")
    p.add_argument("--coproduct", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_enumerate(args, out) -> int:
    enum = (enumerate_nc_partitions if args.lattice == "nc"
            else enumerate_set_partitions)
    parts = enum(args.n)
    if args.count:
        print(json.dumps({"count": len(parts)}) if args.json else len(parts),
              file=out)
        return 0
    if args.json:
        print(json.dumps([p.to_json() for p in parts]), file=out)
    else:
        for p in parts:
            print(p.text(), file=out)
    return 0


def _cmd_coproduct(args, out) -> int:
    if args.kind == "tree":
        terms = tree_coproduct(parse_tree(args.subject))
        if args.json:
            data = [{"coefficient": coeff_str(c),
                     "rooted": tree_text(key[0]),
                     "pruned": [tree_text(t) for t in key[1]]}
                    for key, c in sorted(terms.items(), key=lambda kv: str(kv[0]))]
            print(json.dumps(data), file=out)
        else:
            print(tree_tensor_text(terms), file=out)
        return 0
    if args.kind == "nc":
        shape = parse_partition(args.subject)
        terms = delta_nc(DecoratedNC(NonCrossingPartition(shape.blocks)))
    else:
        terms = delta_word(parse_word(args.subject))
    if args.json:
        data = [{"coefficient": coeff_str(c),
                 "left": barword_text(key[0]),
                 "right": barword_text(key[1])}
                for key, c in sorted(terms.items(), key=lambda kv: str(kv[0]))]
        print(json.dumps(data), file=out)
    else:
        print(tensor_text(terms), file=out)
    return 0


def _cmd_moebius(args, out) -> int:
    noncrossing = args.lattice == "nc"
    lo = parse_partition(args.lo, noncrossing=noncrossing)
    hi = parse_partition(args.hi, noncrossing=noncrossing)
    value = moebius(args.lattice, lo, hi)
    print(json.dumps({"moebius": value}) if args.json else value, file=out)
    return 0


def _sequence_lines(prefix: str, values, out, as_json: bool):
    if as_json:
        print(json.dumps({"kind": prefix,
                          "values": [coeff_str(v) for v in values]}),
              file=out)
        return
    for i, v in enumerate(values, start=1):
        print(f"{prefix}_{i} = {coeff_str(v)}", file=out)


def _cmd_transform(args, out) -> int:
    direction = args.direction
    flavor_dirs = {"classical": {"c2m", "m2c"},
                   "free": {"k2m", "m2k", "multi-m2k"}}
    if direction not in flavor_dirs[args.flavor]:
        raise NcHopfError(
            f"direction {direction!r} does not apply to {args.flavor}")

    if direction == "multi-m2k":
        if not args.infile:
            raise NcHopfError("multi-m2k requires --in with a moment table")
        with open(args.infile) as fh:
            phi = multi_moment_map_from_json(json.load(fh))
        r = generalized_free_cumulants(phi)
        items = sorted(r.table.items(), key=lambda kv: (len(kv[0]), kv[0]))
        if args.json:
            print(json.dumps({"alphabet": list(r.alphabet),
                              "values": {".".join(k): coeff_str(v)
                                         for k, v in items}}), file=out)
        else:
            for letters, v in items:
                print(f"R[{'.'.join(letters)}] = {coeff_str(v)}", file=out)
        return 0

    order = args.n if args.n is not None else default_truncation()
    if args.symbolic:
        if direction in ("c2m", "k2m"):
            flavor = CLASSICAL if direction == "c2m" else FREE
            seq = symbolic_cumulants(order, flavor)
        else:
            seq = symbolic_moments(order)
    else:
        if not args.infile:
            raise NcHopfError("numeric transforms require --in (or --symbolic)")
        with open(args.infile) as fh:
            data = json.load(fh)
        if direction in ("c2m", "k2m"):
            flavor = CLASSICAL if direction == "c2m" else FREE
            seq = cumulant_sequence_from_json(data, flavor)
        else:
            seq = moment_sequence_from_json(data)

    if direction == "c2m":
        result = classical_moments_from_cumulants(seq)
        _sequence_lines("m", result.values[1:], out, args.json)
    elif direction == "k2m":
        result = free_moments_from_cumulants(seq)
        _sequence_lines("m", result.values[1:], out, args.json)
    elif direction == "m2c":
        result = classical_cumulants_from_moments(seq)
        _sequence_lines("c", result.values, out, args.json)
    else:
        result = free_cumulants_from_moments(seq)
        _sequence_lines("k", result.values, out, args.json)
    return 0


def _cmd_split(args, out) -> int:
    shape = parse_partition(args.subject)
    splits = admissible_splits(NonCrossingPartition(shape.blocks))
    rows = []
    for s in splits:
        q = s.q_part.text() if s.q_part.blocks else "{}"
        comps = [c.text() for c in s.components if c.blocks]
        rows.append((q, comps))
    if args.json:
        print(json.dumps([{"selected": q, "components": comps}
                          for q, comps in rows]), file=out)
    else:
        for q, comps in rows:
            print(f"{q} | {' '.join(comps) if comps else '{}'}", file=out)
    return 0


def _cmd_tree(args, out) -> int:
    shape = parse_partition(args.subject)
    t = hierarchy_tree(NonCrossingPartition(shape.blocks))
    if args.coproduct:
        terms = tree_coproduct(t)
        if args.json:
            data = {"tree": tree_to_json(t),
                    "coproduct": [{"coefficient": coeff_str(c),
                                   "rooted": tree_text(k[0]),
                                   "pruned": [tree_text(x) for x in k[1]]}
                                  for k, c in sorted(terms.items(),
                                                     key=lambda kv: str(kv[0]))]}
            print(json.dumps(data), file=out)
        else:
            print(tree_tensor_text(terms), file=out)
        return 0
    if args.json:
        print(json.dumps({"tree": tree_to_json(t), "text": tree_text(t)}),
              file=out)
    else:
        print(tree_text(t), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    name = _SUITE_ALIASES.get(args.suite, args.suite)
    kwargs = {}
    if args.max_degree is not None and name != "all":
        param = _SUITE_SIZE_PARAM.get(name)
        if param:
            kwargs[param] = args.max_degree
    try:
        reports = run_suite(name, **kwargs)
    except KeyError as exc:
        raise NcHopfError(str(exc)) from exc
    if args.json:
        print(json.dumps([{
            "suite": r.name,
            "passed": r.passed,
            "checks": [{"label": c.label, "ok": c.ok, "detail": c.detail}
                       for c in r.checks]} for r in reports]), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "coproduct": _cmd_coproduct,
    "moebius": _cmd_moebius,
    "transform": _cmd_transform,
    "split": _cmd_split,
    "tree": _cmd_tree,
    "verify": _cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args, out)
    except NcHopfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
