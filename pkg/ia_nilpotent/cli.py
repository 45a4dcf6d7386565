# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Command-line interface
======================

Usage:
    ia-nilpotent construct --family quaternion --order 8 --out Q8.json
    ia-nilpotent analyze Q8.json
    ia-nilpotent autos Q8.json --which ia
    ia-nilpotent classify --triple "C_2 x C_2 | C_2 x C_2 | C_2"
    ia-nilpotent hom "C_4 x C_2" "C_4"
    ia-nilpotent --jobs 4 verify --builtin --all

Exit status is 0 on success, 1 when a suite reports a failure or
violation, and 2 on invalid input.
"""

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from ia_nilpotent import hooks
from ia_nilpotent.config.settings import get_settings, use_settings
from ia_nilpotent.exceptions import IaNilpotentError
from ia_nilpotent.groups import abelian
from ia_nilpotent.groups.autos import AUT_SETS
from ia_nilpotent.groups.corpus import load_corpus
from ia_nilpotent.groups.group_file import dump_group, load_group, load_presentation
from ia_nilpotent.groups.invariants import analysis_report, parse_triple
from ia_nilpotent.groups.pcgroup import FAMILIES, build_group
from ia_nilpotent.groups.theorems import (
    check_thm21_iii,
    classify_thm21_finite,
    classify_thm21_symbolic,
    render_table,
    run_suite,
)
from ia_nilpotent.utils import configure_logging, get_attr, logger

# Constructor keyword -> command-line flag, per family
FAMILY_PARAMS = {
    "cyclic": ("n",),
    "abelian": ("descriptor",),
    "dihedral": ("order",),
    "quaternion": ("order",),
    "extraspecial": ("p", "order", "kind"),
    "heisenberg": ("p", "k"),
    "paper-example-32": (),
}

OPTIONAL_PARAMS = {"kind", "k"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ia-nilpotent",
        description="IA-automorphisms and Schur-type bounds of finite nilpotent groups",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text", help="Report format")
    parser.add_argument("--out", help="Write the report (or constructed group file) here")
    parser.add_argument("--cap", type=int, help="Largest group order to build")
    parser.add_argument("--oracle-cap", type=int, help="Largest order for brute-force enumeration")
    parser.add_argument("--seed", type=int, help="Seed for sampled generating tuples")
    parser.add_argument("--sample-limit", type=int, help="Generating tuples sampled per group")
    parser.add_argument("--jobs", type=int, help="Worker processes for verify")
    parser.add_argument("--verbose", action="store_true", help="Log debug messages")
    parser.add_argument("--quiet", action="store_true", help="Only log errors")
    subparsers = parser.add_subparsers(dest="command", required=True)

    construct = subparsers.add_parser("construct", help="Build a group and write its group file")
    source = construct.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=sorted(FAMILIES), help="Built-in family")
    source.add_argument("--presentation", help="Presentation file (.pc)")
    construct.add_argument("--n", type=int, help="Order of a cyclic group")
    construct.add_argument("--order", type=int, help="Group order")
    construct.add_argument("--p", type=int, help="Prime")
    construct.add_argument("--k", type=int, help="Heisenberg exponent (matrices over Z/p^k)")
    construct.add_argument("--kind", choices=("+", "-"), help="Extraspecial type")
    construct.add_argument("--descriptor", help='Abelian descriptor such as "C_4 x C_2"')
    construct.add_argument("--name", help="Group name (default from the family)")

    analyze = subparsers.add_parser("analyze", help="Structural invariants of a group")
    analyze.add_argument("group", help="Group file")

    autos = subparsers.add_parser("autos", help="Export an automorphism set")
    autos.add_argument("group", help="Group file")
    autos.add_argument("--which", choices=sorted(AUT_SETS), default="ia")

    classify = subparsers.add_parser("classify", help="Classify IA(G) = Inn(G) for a group or a triple")
    target = classify.add_mutually_exclusive_group(required=True)
    target.add_argument("group", nargs="?", help="Group file")
    target.add_argument("--triple", help='"G/Z | G/G\' | G\'" descriptors')
    classify.add_argument("--star", action="store_true", help="Classify IA(G)* ~ Inn(G) instead")

    hom = subparsers.add_parser("hom", help="Structure of Hom(U, V) for abelian descriptors")
    hom.add_argument("source", help="Descriptor of U")
    hom.add_argument("target", help="Descriptor of V")

    verify = subparsers.add_parser("verify", help="Run theorem checks over a corpus")
    corpus = verify.add_mutually_exclusive_group(required=True)
    corpus.add_argument("--builtin", action="store_true", help="Use the built-in corpus")
    corpus.add_argument("--corpus", help="Directory of group and presentation files")
    checks = verify.add_mutually_exclusive_group()
    checks.add_argument("--all", action="store_true", help="Run every check (default)")
    checks.add_argument("--select", help=f"Comma-separated checks from: {', '.join(hooks.theorem_checks)}")
    verify.add_argument("--timings", action="store_true", help="Record seconds per check")
    verify.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    return parser


# ============================================================
# COMMANDS
# ============================================================

def cmd_construct(args, parser: argparse.ArgumentParser) -> int:
    if args.presentation:
        path = Path(args.presentation)
        G = build_group(load_presentation(path), name=args.name or path.stem)
    else:
        kwargs = {}
        for param in FAMILY_PARAMS[args.family]:
            value = getattr(args, param)
            if value is None:
                if param in OPTIONAL_PARAMS:
                    continue
                parser.error(f"--family {args.family} needs --{param}")
            kwargs[param] = abelian.parse_descriptor(value) if param == "descriptor" else value
        if args.family == "abelian":
            kwargs = {"U": kwargs["descriptor"]}
        G = FAMILIES[args.family](**kwargs)
        if args.name:
            G = replace(G, name=args.name)
    out = Path(args.out or f"{G.name}.json")
    dump_group(G, out)
    print(out)
    return 0


def cmd_analyze(args) -> int:
    report = analysis_report(load_group(args.group))
    text = "\n".join(f"{key}: {'-' if value is None else value}" for key, value in report.items())
    return _emit(args, report, text)


def cmd_autos(args) -> int:
    G = load_group(args.group)
    S = AUT_SETS[args.which](G)
    export = S.export()
    lines = [f"{export['kind']}({export['group']}): order {export['order']}, structure {export['structure']}"]
    lines += [phi.one_line() for phi in S.sorted_members]
    return _emit(args, export, "\n".join(lines))


def cmd_classify(args) -> int:
    if args.triple:
        verdict = classify_thm21_symbolic(parse_triple(args.triple), star=args.star)
    else:
        G = load_group(args.group)
        verdict = check_thm21_iii(G) if args.star else classify_thm21_finite(G)
    data = verdict.as_dict()
    text = "\n".join(f"{key}: {'-' if value is None else value}" for key, value in data.items())
    return _emit(args, data, text)


def cmd_hom(args) -> int:
    U, V = abelian.parse_descriptor(args.source), abelian.parse_descriptor(args.target)
    H = abelian.hom_structure(U, V)
    data = {
        "source": str(U),
        "target": str(V),
        "hom": str(H),
        "order": abelian.order(H),
    }
    return _emit(args, data, str(H))


def cmd_verify(args) -> int:
    if args.builtin:
        corpus = get_attr(hooks.default_corpus)()
    else:
        corpus = load_corpus(args.corpus)
    which = args.select or "all"
    report = run_suite(corpus, which, with_timings=args.timings, progress=not args.no_progress)
    _emit(args, report, render_table(report))
    return 0 if report["ok"] else 1


def _emit(args, payload, text: str) -> int:
    output = json.dumps(payload, indent=2) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(output + "\n", encoding="utf-8")
    else:
        print(output)
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "autos": cmd_autos,
    "classify": cmd_classify,
    "hom": cmd_hom,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)
    try:
        settings = get_settings().replace(
            group_cap=args.cap,
            oracle_cap=args.oracle_cap,
            seed=args.seed,
            sample_limit=args.sample_limit,
            jobs=args.jobs,
        )
        with use_settings(settings):
            if args.command == "construct":
                return cmd_construct(args, parser)
            return COMMANDS[args.command](args)
    except (IaNilpotentError, ValueError) as e:
        logger("cli").debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
