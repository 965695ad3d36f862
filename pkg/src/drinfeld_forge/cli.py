"""Command line front end.

Three subcommands: `build` emits the bracket table and splitting data as
canonical JSON, `verify` runs named checks and reports one line per check,
`export` renders byte-stable views (brackets, cocommutators, r-matrix,
pairing matrix, representation matrices).

Exit codes: 0 all checks passed, 1 at least one check failed, 2 bad
arguments or an impossible check/splitting combination, 3 output could
not be written.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import build_series, verify_jacobi
from .bialgebra import (SPAN_BUILDERS, build_r_matrix,
                        cocommutator_from_structure, verify_chain_embedding,
                        verify_coboundary, verify_cocycle, verify_cojacobi,
                        verify_cybe, verify_delta_agreement,
                        verify_subbialgebra, verify_twist)
from .double import (SplittingSpec, split, verify_casimir_form,
                     verify_closure, verify_compatibility,
                     verify_form_invariance, verify_pairing,
                     verify_reconstruction, verify_self_duality)
from .errors import ClosureError, RankError, SpecError
from .generators import SERIES, validate_series_rank
from .reps import (ad_invariance_report, bosonic_rep, casimir_double,
                   casimir_quadratic, fermionic_rep, verify_casimir_commutes,
                   verify_rep_homomorphism)
from .serialize import (delta_json, dumps_canonical, element_json,
                        matrix_text_exact, matrix_text_float, table_text,
                        tensor2_json, wedge_json)

CHECKS = ("jacobi", "closure", "pairing", "reconstruction", "compatibility",
          "selfdual", "forminv", "delta-agree", "cocycle", "cojacobi",
          "subbialg", "coboundary", "cybe", "twist", "chain", "rep",
          "casimir")

# these manipulate the full set of central charges, so a mixed splitting
# has nothing for them to act on
_CANONICAL_ONLY = {"delta-agree", "twist"}

EXPORTS = ("brackets", "delta", "rmatrix", "pairing", "matrices")


def _natural_reps(alg, cutoff):
    reps = []
    if alg.series in ("A", "B", "D"):
        reps.append(fermionic_rep(alg))
    if alg.series in ("A", "C"):
        reps.append(bosonic_rep(alg, cutoff))
    return reps


def _run_check(name, triple, args, cache):
    alg = triple.double
    if name == "jacobi":
        return [verify_jacobi(alg, jobs=args.jobs)]
    if name == "closure":
        return [verify_closure(triple)]
    if name == "pairing":
        return [verify_pairing(triple)]
    if name == "reconstruction":
        return [verify_reconstruction(triple)]
    if name == "compatibility":
        return [verify_compatibility(triple, jobs=args.jobs)]
    if name == "selfdual":
        return [verify_self_duality(triple)]
    if name == "forminv":
        return [verify_form_invariance(triple)]
    if name == "delta-agree":
        return [verify_delta_agreement(triple)]
    if name == "casimir":
        out = [verify_casimir_form(triple),
               ad_invariance_report(alg, casimir_quadratic(alg)),
               ad_invariance_report(alg, casimir_double(alg))]
        for rep in _natural_reps(alg, args.cutoff):
            out.append(verify_casimir_commutes(alg, rep, casimir_quadratic(alg)))
        return out
    if name == "rep":
        return [verify_rep_homomorphism(alg, rep)
                for rep in _natural_reps(alg, args.cutoff)]
    if name == "chain":
        return [verify_chain_embedding(alg.series, alg.rank)]

    if "delta" not in cache:
        cache["delta"] = cocommutator_from_structure(triple)
    table = cache["delta"]
    if name == "cocycle":
        return [verify_cocycle(alg, table)]
    if name == "cojacobi":
        return [verify_cojacobi(alg, table)]
    if name == "coboundary":
        return [verify_coboundary(triple, table)]
    if name == "cybe":
        return [verify_cybe(triple)]
    if name == "subbialg":
        if args.sub in ("An", "Anc", "Dn") and triple.spec.mode != "canonical":
            raise SpecError(f"span {args.sub!r} needs the full set of "
                            "central charges")
        label, span = SPAN_BUILDERS[args.sub](triple)
        return [verify_subbialgebra(alg, table, span, label)]
    if name == "twist":
        return [verify_twist(triple)]
    raise SpecError(f"unknown check {name!r}")


def _parse_checks(text, spec):
    if text == "all":
        names = list(CHECKS)
        if spec.mode != "canonical":
            names = [n for n in names if n not in _CANONICAL_ONLY]
        return names
    names = []
    for raw in text.split(","):
        name = raw.strip()
        if not name:
            continue
        if name not in CHECKS:
            raise SpecError(f"unknown check {name!r}; choose from "
                            + ", ".join(CHECKS))
        if spec.mode != "canonical" and name in _CANONICAL_ONLY:
            raise SpecError(f"check {name!r} needs the canonical splitting")
        if name not in names:
            names.append(name)
    return names


def _splitting_payload(triple):
    index = triple.double.index
    sides = {}
    for side, members in (("splus", triple.splus), ("sminus", triple.sminus)):
        sides[side] = [{"gen": gid.label,
                        "element": element_json(triple.elem(gid), index)}
                       for gid in members]
    sides["pairing"] = [
        {"minus": m.label, "plus": p.label, "value": value.to_strings()}
        for (m, p), value in sorted(
            triple.pairing.items(),
            key=lambda kv: (triple.minus_index[kv[0][0]],
                            triple.plus_index[kv[0][1]]))
        if value]
    return sides


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 3
    return 0


def _run_build(args):
    triple = split(args.series, args.rank, args.spec)
    alg = triple.double
    payload = alg.to_json()
    payload["spec"] = triple.spec.to_json()
    payload["dimension"] = alg.dim
    payload["splitting"] = _splitting_payload(triple)
    return _emit(dumps_canonical(payload), args.out)


def _run_verify(args):
    spec = SplittingSpec.parse(args.spec)
    names = _parse_checks(args.checks, spec)
    triple = split(args.series, args.rank, spec)
    cache = {}
    reports = []
    for name in names:
        reports.extend(_run_check(name, triple, args, cache))
    passed = all(r.passed for r in reports)
    if args.json:
        payload = {
            "series": args.series,
            "rank": args.rank,
            "spec": triple.spec.to_json(),
            "passed": passed,
            "reports": [r.to_dict() for r in reports],
        }
        out = dumps_canonical(payload)
    else:
        lines = [r.summary() for r in reports]
        failed = sum(1 for r in reports if not r.passed)
        lines.append(f"{len(reports)} check(s): "
                     + ("all passed" if passed else f"{failed} failed"))
        out = "\n".join(lines) + "\n"
    code = _emit(out, args.out)
    if code:
        return code
    return 0 if passed else 1


def _matrices_text(alg, cutoff):
    blocks = []
    for rep in _natural_reps(alg, cutoff):
        header = f"# {rep.kind} space_dim {rep.space_dim}"
        if rep.cutoff is not None:
            header += f" cutoff {rep.cutoff}"
        blocks.append(header + "\n")
        for gid in alg.basis:
            blocks.append(f"gen {gid.label}\n")
            mat = rep.matrix(gid)
            blocks.append(matrix_text_exact(mat.entries) if rep.exact
                          else matrix_text_float(mat))
    return "".join(blocks)


def _run_export(args):
    triple = split(args.series, args.rank, args.spec)
    alg = triple.double
    if args.what == "brackets":
        text = table_text(alg.to_json())
    elif args.what == "delta":
        table = cocommutator_from_structure(triple)
        payload = delta_json(alg.series, alg.rank, alg.basis,
                             {gid: table.delta(gid) for gid in alg.basis})
        payload["spec"] = triple.spec.to_json()
        text = dumps_canonical(payload)
    elif args.what == "rmatrix":
        rmat = build_r_matrix(triple)
        payload = {
            "series": alg.series,
            "rank": alg.rank,
            "spec": triple.spec.to_json(),
            "nonskew": tensor2_json(rmat.nonskew, alg.index),
            "skew_root": wedge_json(rmat.skew_root, alg.index),
            "skew_cartan": wedge_json(rmat.skew_cartan, alg.index),
        }
        text = dumps_canonical(payload)
    elif args.what == "pairing":
        rows = triple.pairing_matrix()
        entries = {(r, c): value
                   for r, row in enumerate(rows)
                   for c, value in enumerate(row)}
        text = matrix_text_exact(entries)
    else:
        text = _matrices_text(alg, args.cutoff)
    return _emit(text, args.out)


def _add_common(parser):
    parser.add_argument("--series", default=None, choices=SERIES,
                        help="series letter (required here or in --config)")
    parser.add_argument("--rank", default=None, type=int,
                        help="rank >= 1 (required here or in --config)")
    parser.add_argument("--spec", default="canonical",
                        help='splitting: "canonical" or '
                             '"mixed:pairs=1-2;central=3"')
    parser.add_argument("--config", default=None,
                        help="JSON file with default option values")
    parser.add_argument("--out", default=None,
                        help="write output here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="drinfeld-forge",
        description="Build and verify centrally extended classical Lie "
                    "algebras, their Manin triples, and bialgebra data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit brackets and splitting data")
    _add_common(p_build)

    p_verify = sub.add_parser("verify", help="run checks")
    _add_common(p_verify)
    p_verify.add_argument("--checks", default="all",
                          help="comma separated subset of: " + ", ".join(CHECKS))
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                          help="worker processes for the heavy checks")
    p_verify.add_argument("--cutoff", type=int, default=6,
                          help="occupation cutoff for the bosonic checks")
    p_verify.add_argument("--sub", default="splus",
                          choices=sorted(SPAN_BUILDERS),
                          help="span for the subbialg check")
    p_verify.add_argument("--json", action="store_true",
                          help="emit a JSON report instead of text lines")

    p_export = sub.add_parser("export", help="render one view, byte stable")
    _add_common(p_export)
    p_export.add_argument("--what", required=True, choices=EXPORTS)
    p_export.add_argument("--cutoff", type=int, default=6,
                          help="occupation cutoff for bosonic matrices")
    return parser


def _apply_config(parser, argv):
    """Load --config JSON as parser defaults, keeping flag overrides."""
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", default=None)
    known, _ = probe.parse_known_args(argv)
    if known.config is None:
        return
    try:
        with open(known.config, "r", encoding="ascii") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read config {known.config}: {exc}") from None
    if not isinstance(data, dict):
        raise SpecError("config must be a JSON object")
    valid = {"series", "rank", "spec", "checks", "jobs", "cutoff", "sub",
             "json", "out", "what"}
    unknown = set(data) - valid
    if unknown:
        raise SpecError("unknown config keys: " + ", ".join(sorted(unknown)))
    for action in parser._subparsers._group_actions:
        for subparser in action.choices.values():
            subparser.set_defaults(**{k: v for k, v in data.items()})


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if args.series is None or args.rank is None:
            raise SpecError("--series and --rank are required, on the "
                            "command line or through --config")
        validate_series_rank(args.series, args.rank)
        if args.command == "build":
            return _run_build(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_export(args)
    except (RankError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ClosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
