"""Command-line front end.

Commands:

  check      property check for one group and prime set
  ncgraph    non-commuting graph summary (optionally a domination pair)
  h1         derivation-space dimensions for a shipped presentation
  tables     classification table queries
  catalogue  list the built-in groups
  crosscheck classification soundness over the catalogue

Exit codes: 0 success, 1 the checked property fails, 2 usage error,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalogue, modrep, ncgraph, properties, tables
from .permgroup import CapExceeded, DEFAULT_ELEMENT_CAP

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _resolve_group(selector):
    """Catalogue name first, then a generator-file path."""
    try:
        desc = catalogue.resolve(selector)
        return desc.key, catalogue.build(desc.key)
    except KeyError:
        pass
    if os.path.exists(selector):
        return os.path.basename(selector), catalogue.build_from_file(selector)
    raise SystemExit2(f"unknown group {selector!r} (not a catalogue name or file)")


class SystemExit2(Exception):
    pass


def _write_or_print(payload, out):
    text = properties.canonical_json(payload)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args):
    pi = properties.PiSet.parse(args.pi)
    name, group = _resolve_group(args.group)
    report = properties.check_soluble_pi_centralisers(
        group, pi, cap=args.cap, name=name, seed=args.seed)
    _write_or_print(report.to_json(), args.out)
    if report.outcome == "capped":
        return EXIT_CAP
    return EXIT_OK if report.outcome == "holds" else EXIT_FAILS


def cmd_ncgraph(args):
    name, group = _resolve_group(args.group)
    try:
        graph = ncgraph.build_ncgraph(group, cap=args.cap)
    except CapExceeded:
        return EXIT_CAP
    payload = {
        "group": name,
        "vertices": graph.vertex_count(),
        "degree_multiset": [list(t) for t in graph.degree_multiset()],
        "fingerprint": [graph.vertex_count(),
                        [list(t) for t in graph.degree_multiset()],
                        graph.triangle_sample()],
        "domination_pair": None,
    }
    if args.domination:
        pair = ncgraph.domination_pair(graph, cap=args.cap)
        if pair is not None:
            assert ncgraph.verify_domination_pair(graph, pair)
            payload["domination_pair"] = [pair[0].cycle_string(),
                                          pair[1].cycle_string()]
    _write_or_print(payload, args.out)
    return EXIT_OK


def cmd_h1(args):
    pres = catalogue.shipped_presentation(args.group)
    G = pres.group()
    p = args.p
    if args.module == "perm":
        M = modrep.permutation_module(G, p)
    elif args.module == "deleted":
        M = modrep.deleted_submodule(modrep.permutation_module(G, p))
    elif args.module == "trivial":
        M = modrep.trivial_module(G, p)
    elif args.module.startswith("file:"):
        M = modrep.read_module_file(args.module[5:], group=G)
    else:
        raise SystemExit2(f"unknown module selector {args.module!r}")
    space = modrep.derivation_space(pres, M)
    payload = {"group": pres.name, "module": args.module, "p": p,
               "dim": M.dim, "dim_z1": space.dim_z1, "dim_b1": space.dim_b1,
               "dim_h1": space.dim_h1}
    _write_or_print(payload, args.out)
    return EXIT_OK


def cmd_tables(args):
    q = args.query
    if q == "thickness":
        if args.p is None:
            raise SystemExit2("--p required for thickness")
        result = tables.thickness_bound(args.p)
    elif q == "xalt":
        if args.n is None or not args.pi:
            raise SystemExit2("--n and --pi required for xalt")
        result = tables.alt_degree_allowed(
            args.n, properties.PiSet.parse(args.pi).as_set())
    elif q == "xclass":
        if not args.pi:
            raise SystemExit2("--pi required for xclass")
        result = tables.classical_rank_bound(
            args.family or "L", properties.PiSet.parse(args.pi).as_set())
    elif q == "psp":
        if not args.pi:
            raise SystemExit2("--pi required for psp")
        result = tables.symplectic_dim_bound(
            properties.PiSet.parse(args.pi).as_set())
    elif q == "xspor":
        if not args.name or not args.pi:
            raise SystemExit2("--name and --pi required for xspor")
        result = tables.sporadic_allowed(
            args.name, properties.PiSet.parse(args.pi).as_set())
    elif q == "sporalt":
        if not args.name:
            raise SystemExit2("--name required for sporalt")
        result = tables.sporadic_max_alt_degree(args.name)
    elif q == "excalt":
        if not args.name:
            raise SystemExit2("--name required for excalt")
        result = tables.exceptional_alt_degree(args.name)
    elif q == "Q":
        if args.q is None:
            raise SystemExit2("--q required for Q")
        result = tables.q_is_special(args.q)
    elif q == "table1":
        if not args.pi:
            raise SystemExit2("--pi required for table1")
        result = list(tables.composition_factors_for(
            properties.PiSet.parse(args.pi).as_set()))
    else:
        raise SystemExit2(f"unknown table query {q!r}")
    print(result if not isinstance(result, bool) else ("yes" if result else "no"))
    return EXIT_OK


def cmd_catalogue(args):
    for desc in catalogue.list_descriptors():
        kind = desc.classification.kind if desc.classification else "auxiliary"
        print(f"{desc.key:10s} order {desc.expected_order:>12} {kind}")
    return EXIT_OK


def cmd_crosscheck(args):
    pi = properties.PiSet.parse(args.pi)
    report = properties.classification_crosscheck(pi, cap=args.cap)
    _write_or_print(report.to_json(), args.out)
    return EXIT_OK if report.violations == 0 else EXIT_FAILS


def build_parser():
    ap = argparse.ArgumentParser(prog="centra",
                                 description="soluble-centraliser toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="pi-centraliser solubility check")
    c.add_argument("--group", required=True)
    c.add_argument("--pi", required=True, help="comma-separated primes or 'all'")
    c.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("ncgraph", help="non-commuting graph summary")
    g.add_argument("--group", required=True)
    g.add_argument("--domination", action="store_true")
    g.add_argument("--cap", type=int, default=100_000)
    g.add_argument("--out")
    g.set_defaults(func=cmd_ncgraph)

    h = sub.add_parser("h1", help="derivation space dimensions")
    h.add_argument("--group", required=True,
                   help="a group with a shipped presentation")
    h.add_argument("--module", default="deleted",
                   help="perm | deleted | trivial | file:PATH")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--out")
    h.set_defaults(func=cmd_h1)

    t = sub.add_parser("tables", help="classification table queries")
    t.add_argument("--query", required=True,
                   help="xalt|xclass|xspor|sporalt|excalt|Q|thickness|psp|table1")
    t.add_argument("--p", type=int)
    t.add_argument("--n", type=int)
    t.add_argument("--q", type=int)
    t.add_argument("--pi")
    t.add_argument("--name")
    t.add_argument("--family")
    t.set_defaults(func=cmd_tables)

    l = sub.add_parser("catalogue", help="list built-in groups")
    l.add_argument("--list", action="store_true")
    l.set_defaults(func=cmd_catalogue)

    x = sub.add_parser("crosscheck", help="classification soundness check")
    x.add_argument("--pi", required=True)
    x.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP)
    x.add_argument("--out")
    x.set_defaults(func=cmd_crosscheck)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
