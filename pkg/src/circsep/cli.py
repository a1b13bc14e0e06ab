"""Command line: verify, construct, exact, gen.

Exit codes: 0 success, 1 the family misses some pair, 2 bad input or the
request cannot be met.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import generators
from .construct import construct_two_outerplanar, sp_construct
from .errors import CircSepError
from .exact import DEFAULT_BOUND, DEFAULT_KMAX, exact_pi_circ
from .graph import verify_family
from .io import EmbeddingFile, FamilyFile, GraphFile, Labels, read_text

OK, VIOLATED, ERROR = 0, 1, 2


class Reporter:
    def __init__(self, as_json: bool, out=None):
        self.as_json = as_json
        self.out = out or sys.stdout

    def report(self, ok, k, violations=(), millis=0.0, labels=None, **extra):
        name = labels.name if labels else str
        pairs = [[[name(e[0]), name(e[1])], [name(f[0]), name(f[1])]] for e, f in violations]
        if self.as_json:
            body = {"ok": ok, "k": k, "violations": pairs, "millis": round(millis, 3)}
            body.update(extra)
            print(json.dumps(body), file=self.out)
            return
        status = "ok" if ok else "FAIL"
        print(f"{status}: {k} ordering(s), {len(pairs)} violation(s), {millis:.1f} ms", file=self.out)
        for (a, b), (c, d) in pairs:
            print(f"  crossing in every ordering: {a}-{b} / {c}-{d}", file=self.out)

    def error(self, msg):
        if self.as_json:
            print(json.dumps({"ok": False, "error": msg}), file=self.out)
        else:
            print(f"error: {msg}", file=sys.stderr)


def _load_graph(path, named):
    return GraphFile.parse(read_text(path), named=named)


def _verify_one(graph_path, family_path, args, rep):
    gf = _load_graph(graph_path, args.labels)
    fam = FamilyFile.parse(read_text(family_path), gf.labels).family
    t = time.perf_counter()
    v = verify_family(gf.graph, fam)
    ms = (time.perf_counter() - t) * 1000
    extra = {"graph": str(graph_path)} if args.all else {}
    rep.report(v.ok, len(fam), v.violations, ms, gf.labels, **extra)
    return OK if v.ok else VIOLATED


def cmd_verify(args, rep):
    if args.all:
        if args.graph or args.family:
            raise CircSepError("--all takes a directory and no other files")
        names = sorted(f for f in os.listdir(args.all) if f.endswith(".graph"))
        if not names:
            raise CircSepError(f"no .graph files in {args.all}")
        worst = OK
        for f in names:
            base = os.path.join(args.all, f[: -len(".graph")])
            if not os.path.exists(base + ".family"):
                rep.error(f"{base}.family is missing")
                worst = ERROR
                continue
            try:
                worst = max(worst, _verify_one(base + ".graph", base + ".family", args, rep))
            except CircSepError as ex:
                rep.error(f"{base}: {ex}")
                worst = ERROR
        return worst
    if not (args.graph and args.family):
        raise CircSepError("verify needs GRAPH and FAMILY (or --all DIR)")
    return _verify_one(args.graph, args.family, args, rep)


def cmd_construct(args, rep):
    gf = _load_graph(args.graph, args.labels)
    g = gf.graph
    t = time.perf_counter()
    if args.sp:
        if args.embedding:
            raise CircSepError("--sp takes no embedding file")
        fam = sp_construct(g)
    else:
        if not args.embedding:
            raise CircSepError("construct needs an embedding file unless --sp is given")
        emb = EmbeddingFile.parse(read_text(args.embedding), gf).embedding
        fam = construct_two_outerplanar(g, emb)
    # never hand out a family that was not checked
    v = verify_family(g, fam)
    ms = (time.perf_counter() - t) * 1000
    text = FamilyFile(fam).format(gf.labels)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif not rep.as_json:
        sys.stdout.write(text)
    extra = {"family": text.splitlines()} if rep.as_json else {}
    if not rep.as_json:
        rep.out = sys.stderr
    rep.report(v.ok, len(fam), v.violations, ms, gf.labels, **extra)
    return OK if v.ok else VIOLATED


def cmd_exact(args, rep):
    gf = _load_graph(args.graph, args.labels)
    t = time.perf_counter()
    res = exact_pi_circ(gf.graph, kmax=args.kmax, bound=args.bound)
    ms = (time.perf_counter() - t) * 1000
    if rep.as_json:
        print(json.dumps({"ok": True, "k": res.k, "exceeds": res.exceeds, "vacuous": res.vacuous,
                          "violations": [], "millis": round(ms, 3)}))
    else:
        print(str(res) + (" (vacuous: no two disjoint edges)" if res.vacuous else ""))
    return OK


def cmd_gen(args, rep):
    kind, n, seed = args.kind, args.n, args.seed
    emb = None
    if kind == "outerplanar":
        emb = generators.random_maximal_outerplanar(n, seed)
        g = emb.g
    elif kind == "two-outerplanar":
        emb = generators.random_two_outerplanar(n, seed)
        g = emb.g
    else:
        g = generators.random_series_parallel(n, seed)
    gf = GraphFile(g, Labels.identity(g.n))
    if args.out:
        with open(args.out + ".graph", "w", encoding="utf-8") as fh:
            fh.write(gf.format())
        if emb is not None:
            with open(args.out + ".emb", "w", encoding="utf-8") as fh:
                fh.write(EmbeddingFile(emb).format())
    else:
        sys.stdout.write(gf.format())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circsep", description="Circular separation families: verify, construct, compute exactly.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.add_argument("--labels", action="store_true", help="vertex names in files are arbitrary tokens")

    v = sub.add_parser("verify", help="check that a family separates every pair of disjoint edges")
    v.add_argument("graph", nargs="?")
    v.add_argument("family", nargs="?")
    v.add_argument("--all", metavar="DIR", help="verify every NAME.graph against NAME.family in DIR")
    common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="build a family of at most two orderings")
    c.add_argument("graph")
    c.add_argument("embedding", nargs="?")
    c.add_argument("--sp", action="store_true", help="series-parallel construction (no embedding)")
    c.add_argument("--out", help="write the family here instead of stdout")
    common(c)
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("exact", help="exact circular separation dimension by enumeration")
    e.add_argument("graph")
    e.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    e.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest n to enumerate")
    common(e)
    e.set_defaults(func=cmd_exact)

    gn = sub.add_parser("gen", help="generate a random instance")
    gn.add_argument("kind", choices=["outerplanar", "two-outerplanar", "series-parallel"])
    gn.add_argument("n", type=int)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--out", metavar="PREFIX", help="write PREFIX.graph (and PREFIX.emb)")
    gn.set_defaults(func=cmd_gen, json=False, labels=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    rep = Reporter(args.json)
    try:
        return args.func(args, rep)
    except CircSepError as ex:
        rep.error(str(ex))
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
