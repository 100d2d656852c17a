"""Command-line front end.

Exit status: 0 when everything checked out, 1 when an equivalence failed,
2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formations as fm
from . import lemmas
from . import structure as st
from .classifier import THEOREMS, classify, verify_corpus
from .errors import GroupError
from .io import (bundled_corpus_dir, build_generators, corpus_files,
                 emit_report, format_group_file, lattice_for, load_group_file)
from .lattice import LATTICE_CAP
from .perm import DEFAULT_CAP, Group

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _load(path, cap):
    src = load_group_file(path)
    return src, src.group(cap=cap)


def _lattice(G, args):
    return lattice_for(G, args.cache, args.lattice_cap)


def cmd_analyze(args, out):
    src, G = _load(args.file, args.cap)
    L = _lattice(G, args)
    b = lambda x: "true" if x else "false"  # noqa: E731
    chief = st.chief_series(L).factor_orders
    rows = [
        ("group", src.name),
        ("order", G.order),
        ("degree", G.degree),
        ("pi", " ".join(map(str, L.primes)) or "-"),
        ("exponent", fm.exponent(L)),
        ("abelian", b(fm.is_abelian(L))),
        ("cyclic", b(fm.is_cyclic(L))),
        ("nilpotent", b(st.is_nilpotent(L))),
        ("soluble", b(st.is_soluble(L))),
        ("supersoluble", b(fm.is_supersoluble(L))),
        ("minimal_nonsupersoluble", b(fm.is_minimal_nonsupersoluble(L))),
        ("sdh", b(fm.is_sdh(L))),
        ("schmidt", b(fm.is_schmidt(L))),
        ("miller_moreno", b(fm.is_miller_moreno(L))),
        ("subgroups", len(L)),
        ("subgroup_classes", len(L._orbits)),
        ("normal_subgroups", len(st.normal_subgroups(L))),
        ("chief_factors", " ".join(map(str, chief)) or "-"),
        ("uresidual_order", L.order(fm.u_residual(L))),
        ("fitting_order", L.order(st.fitting(L))),
        ("frattini_order", L.order(st.frattini(L)) if G.order > 1 else 1),
        ("dispersive_orderings", " ".join("".join(f"<{p}>" for p in phi)
                                          for phi in st.dispersive_orderings(L)) or "-"),
    ]
    out.write("".join(f"{k}: {v}\n" for k, v in rows))
    return EXIT_OK


def cmd_classify(args, out):
    src, G = _load(args.file, args.cap)
    report = classify(_lattice(G, args), src.name)
    out.write(emit_report(report))
    return EXIT_OK if report.equivalence_ok else EXIT_FAIL


def cmd_verify(args, out):
    directory = bundled_corpus_dir() if args.corpus == "bundled" else Path(args.corpus)
    sources, errors = [], []
    for path in corpus_files(directory):
        try:
            sources.append(load_group_file(path))
        except GroupError as exc:
            errors.append((path.stem, str(exc)))
    names = [s.name for s in sources]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise GroupError(f"duplicate group names in corpus: {' '.join(dupes)}")
    summary = verify_corpus(sources, args.theorem, jobs=args.jobs, cap=args.cap,
                            lattice_cap=args.lattice_cap, cache=args.cache)
    summary.errors = sorted(summary.errors + errors)
    text = "\n".join(emit_report(r) for r in summary.reports)
    text += ("\n" if text else "") + "\n".join(summary.lines()) + "\n"
    lemma_ok = True
    if args.lemmas:
        groups = []
        for src in sources:
            if src.name in {n for n, _ in summary.errors}:
                continue
            groups.append((src.name, lattice_for(src.group(cap=args.cap), args.cache,
                                                 args.lattice_cap)))
        results = lemmas.run_all(groups)
        lemma_ok = all(r.ok for r in results)
        text += "".join(r.line() + "\n" for r in results)
    out.write(text)
    if args.report:
        Path(args.report).write_text(text)
    if not (summary.ok and lemma_ok):
        return EXIT_FAIL
    return EXIT_INPUT if summary.errors else EXIT_OK


def cmd_lattice(args, out):
    src, G = _load(args.file, args.cap)
    L = _lattice(G, args)
    out.write(f"group: {src.name}\norder: {G.order}\nsubgroups: {len(L)}\n"
              f"classes: {len(L._orbits)}\n")
    for i in range(len(L)):
        gens = " ".join(str(G.element(g)) for g in L.gens[i]) or "()"
        maxes = " ".join(map(str, L.maximal_in(i))) or "-"
        normal = "normal" if L.is_normal_in(i, L.top) else "-"
        out.write(f"{i} order={L.order(i)} class={L.conjugacy_class(i)[0]} {normal}"
                  f" maximal=[{maxes}] gens={gens}\n")
    return EXIT_OK


def cmd_build(args, out):
    gens = build_generators(args.expr)
    G = Group(gens, cap=args.cap)
    out.write(format_group_file(args.name, gens, G.order))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest group order to enumerate (default %(default)s)")
    common.add_argument("--lattice-cap", type=int, default=LATTICE_CAP,
                        help="largest group order for lattice work (default %(default)s)")
    common.add_argument("--cache", metavar="DIR", help="read and write lattice cache files here")

    p = argparse.ArgumentParser(prog="kusub", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="structural profile of one group")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", parents=[common], help="classification report for one group")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", parents=[common], help="check the theorems over a corpus")
    v.add_argument("--theorem", choices=THEOREMS, default="ALL")
    v.add_argument("--corpus", default="bundled", help="corpus directory, or 'bundled'")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", metavar="FILE", help="also write the output here")
    v.add_argument("--lemmas", action="store_true", help="also run the lemma checks")
    v.set_defaults(func=cmd_verify)

    lt = sub.add_parser("lattice", parents=[common], help="list all subgroups of one group")
    lt.add_argument("file")
    lt.set_defaults(func=cmd_lattice)

    b = sub.add_parser("build", parents=[common], help="write a generator file from an expression")
    b.add_argument("--expr", required=True)
    b.add_argument("--name", default="G")
    b.set_defaults(func=cmd_build)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.cap < 1 or args.lattice_cap < 1 or getattr(args, "jobs", 1) < 1:
        print("kusub: caps and --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except GroupError as exc:
        print(f"kusub: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"kusub: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
