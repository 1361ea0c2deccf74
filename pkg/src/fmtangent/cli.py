"""Command-line surface.

Subcommands: survey, report, oracle, demazure.  All state lives on the
command line (no config files, no environment variables), outputs carry a
version stamp but no timestamps, so identical commands produce identical
bytes.

Exit codes: 0 success, 2 parse failure, 3 domain failure, 4 oracle
disagreement with the closed formula, 5 unsupported representation family.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .chevalley import build_chevalley
from .demazure import build_truncated_rep
from .lattice_oracle import (
    LoopElement,
    UnsupportedRepresentationError,
    build_rep,
    epsilon_membership,
    make_adjoint_rep,
)
from .rootsys import (
    CartanType,
    Coweight,
    DomainError,
    RootSystem,
    Weight,
    build_root_system,
)
from .tangent import fm_tangent, m_lambda, quasi_minuscule, quasi_minuscule_survey

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_DISAGREE = 4
EXIT_UNSUPPORTED = 5

SURVEY_CSV_HEADER = ["type", "rank", "m_lambda", "total", "schubert", "verdict"]
ORACLE_CSV_HEADER = ["type", "lambda", "X", "rep", "expected", "got"]


def _envelope(command, **payload) -> dict:
    env = {"tool": "fmtangent", "version": __version__, "command": list(command)}
    env.update(payload)
    return env


def _parse_coweight(rs: RootSystem, raw: str, basis: str) -> Coweight:
    if raw.strip() == "quasi-minuscule":
        return quasi_minuscule(rs)
    try:
        coords = tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise _ParseError(f"cannot parse coweight coordinates {raw!r}")
    if len(coords) != rs.rank:
        raise _ParseError(
            f"expected {rs.rank} coordinates for {rs.cartan_type}, got {len(coords)}"
        )
    if basis == "fundamental":
        return rs.convert(Coweight.fundamental(coords), "simple-coroot")
    return Coweight.simple_coroot(coords)


class _ParseError(Exception):
    pass


def resolve_family(rs: RootSystem, name: str) -> list:
    """Representation family for the oracle sweep.

    default: every supported construction for the type; adjoint: the
    adjoint representation alone; all-fundamental: one representation per
    fundamental weight, which only A1 and A2 support.
    """
    ct = rs.cartan_type
    if name == "adjoint":
        return [make_adjoint_rep(build_chevalley(rs))]
    if name == "all-fundamental":
        if ct.series == "A" and ct.rank == 1:
            return [build_rep(rs, Weight.fundamental((1,)))]
        if ct.series == "A" and ct.rank == 2:
            return [build_rep(rs, Weight.fundamental((1, 0))),
                    build_rep(rs, Weight.fundamental((0, 1)))]
        raise UnsupportedRepresentationError(
            f"no all-fundamental family for {ct}; supported families: "
            "adjoint (any type), all-fundamental (A1, A2), default"
        )
    if name == "default":
        if ct.series == "A" and ct.rank == 1:
            return [build_rep(rs, Weight.fundamental((n,))) for n in range(1, 5)]
        if ct.series == "A" and ct.rank == 2:
            return resolve_family(rs, "all-fundamental") + resolve_family(rs, "adjoint")
        return resolve_family(rs, "adjoint")
    raise _ParseError(f"unknown representation family {name!r}")


def oracle_sweep(rs: RootSystem, lam: Coweight, depth: int, family) -> tuple:
    """Sweep x_beta t^{-k} over all roots beta and 1 <= k <= depth.

    Per representation the predicted verdict is k <= <lam, eta>; the
    family row predicts k <= min over the family.  Returns (verdicts,
    agrees) where agrees is False exactly when some matrix-computed
    membership differs from its prediction, a correctness alarm.
    """
    ca = family[0].algebra
    lam = rs.to_simple_coroot(lam)
    cutoffs = [rs.pairing(lam, rep.highest_weight) for rep in family]
    verdicts = []
    agrees = True
    for k in range(1, depth + 1):
        for beta in rs.roots:
            X = LoopElement.single(-k, {ca.root_index[beta]: 1})
            label = f"x({','.join(map(str, beta))})t^-{k}"
            got_all = True
            for rep, cutoff in zip(family, cutoffs):
                expected = k <= cutoff
                got = epsilon_membership(rep, lam, X)
                got_all = got_all and got
                agrees = agrees and (expected == got)
                verdicts.append({
                    "type": str(rs.cartan_type),
                    "lambda": list(lam.coords),
                    "X": label,
                    "rep": rep.name,
                    "expected": expected,
                    "got": got,
                })
            verdicts.append({
                "type": str(rs.cartan_type),
                "lambda": list(lam.coords),
                "X": label,
                "rep": "family",
                "expected": k <= min(cutoffs),
                "got": got_all,
            })
            agrees = agrees and ((k <= min(cutoffs)) == got_all)
    return verdicts, agrees


# -- output formatting ---------------------------------------------------


def _csv_string(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _survey_rows(reports):
    return [
        [r["type"], r["rank"], r["m_lambda"], r["total"],
         "" if r["schubert_at_e"] is None else r["schubert_at_e"], r["verdict"]]
        for r in reports
    ]


def _format_reports(env, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    reports = env["reports"]
    if fmt == "csv":
        return _csv_string(SURVEY_CSV_HEADER, _survey_rows(reports))
    lines = [f"fmtangent {env['version']}  {' '.join(env['command'])}"]
    widths = (6, 5, 9, 7, 9)
    lines.append("type   rank  m_lambda  total   schubert  verdict")
    for r in reports:
        sch = "-" if r["schubert_at_e"] is None else str(r["schubert_at_e"])
        lines.append(
            f"{r['type']:<{widths[0]}} {r['rank']:<{widths[1]}} "
            f"{r['m_lambda']:<{widths[2]}} {r['total']:<{widths[3]}} "
            f"{sch:<{widths[4]}} {r['verdict']}"
        )
    return "\n".join(lines) + "\n"


def _format_oracle(env, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    if fmt == "csv":
        rows = [
            [v["type"], " ".join(map(str, v["lambda"])), v["X"], v["rep"],
             v["expected"], v["got"]]
            for v in env["verdicts"]
        ]
        return _csv_string(ORACLE_CSV_HEADER, rows)
    lines = [f"fmtangent {env['version']}  {' '.join(env['command'])}"]
    by_k = {}
    for v in env["verdicts"]:
        if v["rep"] != "family":
            continue
        k = int(v["X"].rsplit("^-", 1)[1])
        by_k.setdefault(k, []).append(v["got"])
    for k in sorted(by_k):
        members = by_k[k]
        status = "member" if all(members) else (
            "non-member" if not any(members) else "mixed")
        lines.append(f"k={k}: {status} ({len(members)} root vectors)")
    lines.append(f"agrees_with_formula = {env['agrees']}")
    return "\n".join(lines) + "\n"


def _format_demazure(env, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    d = env["demazure"]
    if fmt == "csv":
        rows = [
            [d["type"], g["degree"], g["dim"],
             "" if g["polo_member"] is None else g["polo_member"]]
            for g in d["graded"]
        ]
        return _csv_string(["type", "degree", "closure_dim", "polo_member"], rows)
    lines = [f"fmtangent {env['version']}  {' '.join(env['command'])}",
             f"type = {d['type']}"]
    for g in d["graded"]:
        polo = "" if g["polo_member"] is None else f"  polo_member={g['polo_member']}"
        lines.append(f"degree {g['degree']}: closure_dim={g['dim']}{polo}")
    lines.append(f"schubert_tangent_dim = {d['schubert_tangent_dim']}")
    return "\n".join(lines) + "\n"


# -- subcommands ----------------------------------------------------------


def _cmd_survey(args, argv) -> int:
    reports = [r.to_dict() for r in quasi_minuscule_survey(args.max_rank)]
    env = _envelope(argv, reports=reports)
    sys.stdout.write(_format_reports(env, args.format))
    return EXIT_OK


def _cmd_report(args, argv) -> int:
    rs = build_root_system(CartanType.parse(args.type))
    lam = _parse_coweight(rs, args.coweight, args.basis)
    report = fm_tangent(rs, lam)
    env = _envelope(argv, reports=[report.to_dict()])
    sys.stdout.write(_format_reports(env, args.format))
    return EXIT_OK


def _cmd_oracle(args, argv) -> int:
    rs = build_root_system(CartanType.parse(args.type))
    lam = _parse_coweight(rs, args.coweight, args.basis)
    m = m_lambda(rs, lam)
    family = resolve_family(rs, args.reps)
    depth = args.depth if args.depth is not None else m + 2
    verdicts, agrees = oracle_sweep(rs, lam, depth, family)
    env = _envelope(
        argv,
        family=[rep.name for rep in family],
        m_lambda=m,
        agrees=agrees,
        verdicts=verdicts,
    )
    sys.stdout.write(_format_oracle(env, args.format))
    return EXIT_OK if agrees else EXIT_DISAGREE


def _cmd_demazure(args, argv) -> int:
    rs = build_root_system(CartanType.parse(args.type))
    ca = build_chevalley(rs)
    tr = build_truncated_rep(ca)
    closure = tr.demazure_closure()
    polo = {}
    for degree in (-1, -2):
        got = {
            tr.polo_membership(LoopElement.single(degree, {i: 1}))
            for i in range(ca.dim)
        }
        if len(got) != 1:
            raise AssertionError(f"non-uniform Polo verdicts at degree {degree}")
        polo[degree] = got.pop()
    graded = [
        {"degree": 0, "dim": closure.graded_dims[0], "polo_member": None},
        {"degree": -1, "dim": closure.graded_dims[-1], "polo_member": polo[-1]},
        {"degree": -2, "dim": closure.graded_dims[-2], "polo_member": polo[-2]},
    ]
    env = _envelope(argv, demazure={
        "type": str(rs.cartan_type),
        "graded": graded,
        "schubert_tangent_dim": closure.graded_dims[-1],
    })
    sys.stdout.write(_format_demazure(env, args.format))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmtangent",
        description="Exact tangent spaces of spherical and FM Schubert schemes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("survey", help="quasi-minuscule table over all simple types")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("report", help="graded FM tangent report for one coweight")
    p.add_argument("--type", required=True)
    p.add_argument("--coweight", required=True,
                   help="comma-separated coordinates or 'quasi-minuscule'")
    p.add_argument("--basis", choices=("coroot", "fundamental"), default="coroot")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("oracle", help="dual-number lattice membership sweep")
    p.add_argument("--type", required=True)
    p.add_argument("--coweight", required=True)
    p.add_argument("--basis", choices=("coroot", "fundamental"), default="coroot")
    p.add_argument("--depth", type=int, default=None,
                   help="max pole order to sweep (default m_lambda + 2)")
    p.add_argument("--reps", default="default",
                   choices=("default", "adjoint", "all-fundamental"))
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("demazure", help="truncated Demazure closure and Polo verdicts")
    p.add_argument("--type", required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=_cmd_demazure)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except _ParseError as exc:
        print(f"fmtangent: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedRepresentationError as exc:
        print(f"fmtangent: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DomainError as exc:
        print(f"fmtangent: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"fmtangent: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
