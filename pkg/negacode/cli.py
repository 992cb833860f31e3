"""
cli.py
======

``negacode`` command line front end.

Every subcommand builds a :class:`~negacode.report.CodeReport` and writes it as
an aligned table (default), tab-separated text (``--tsv``) or JSON
(``--json``); ``--h5 FILE`` also stores the table in an HDF5 file. The two
machine formats lower logging to warnings unless ``-v`` is given.

Exit status is 0 on success, 1 when ``verify`` (or ``mds --table``) finds a
mismatch, and 2 on invalid input or an exhausted search budget.
"""

import argparse
import contextlib
import sys

from astropy import log

from .analysis import CodeParams, certify_mds, min_distance_exhaustive
from .bchkit import FAMILIES, FAMILY_ALIASES, BchSpec, bch_bound, bch_generator, resolve_family, reversible_bch_generator, sweep_family
from .codecore import (
    count_reversible_closed_form,
    enumerate_reversible,
    from_defining_set,
    from_generator,
    only_x_plus_1_self_reciprocal,
)
from .config import conf
from .cosetkit import CosetSystem, coset_size_oracle, is_symmetric, projective_special_values
from .errors import BudgetExceeded, InvalidInput
from .fieldkit import field_of_order
from .mdskit import MdsSpec, construct_mds_lcd
from .polykit import Poly, factor_x_n_plus_1, is_self_reciprocal
from .reference_data import FLAGGED, MISMATCH, TABLE_ALIASES, TABLES, resolve_table, verify_table
from .report import CodeReport, code_record

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


def _int_list(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got "{text}"')


def _distance_fields(code, budget, lower_bound=None):
    """Exact distance and MDS flag, None when the search is over budget."""
    out = {"d": None, "mds": None, "bch_bound": None}
    if 0 < code.k < code.n:
        out["bch_bound"] = bch_bound(code)
    if code.k == 0:
        return out
    try:
        out["d"] = min_distance_exhaustive(code, budget=budget, lower_bound=lower_bound)
        out["mds"] = out["d"] == code.n - code.k + 1
    except BudgetExceeded as err:
        log.warning(f"Exact distance skipped: {err}")
    return out


def cmd_factor(args):
    field = field_of_order(args.q)
    system = CosetSystem(args.n, args.q)
    report = CodeReport("factor", {"n": args.n, "q": args.q})
    for leader, m_s in factor_x_n_plus_1(args.n, args.q, field):
        report.add(
            {
                "leader": leader,
                "degree": m_s.degree,
                "coset_size": len(system.cosets[leader]),
                "self_reciprocal": is_self_reciprocal(m_s),
                "polynomial": str(m_s),
                "coeffs": list(m_s.coeffs),
            }
        )
    return report, EXIT_OK


def cmd_cosets(args):
    if args.special:
        if args.m is None:
            raise InvalidInput("--special needs --m")
        n = (args.q**args.m - 1) // (2 * (args.q - 1))
        system = CosetSystem(n, args.q)
        report = CodeReport("cosets", {"q": args.q, "m": args.m, "n": n, "special": True})
        for reading, value in projective_special_values(args.q, args.m).items():
            inside = value < system.two_n and value % 2 == 1
            report.add(
                {
                    "reading": reading,
                    "value": value,
                    "in_range": inside,
                    "slice_size": coset_size_oracle(system, value) if inside else None,
                    "half_size": args.m // 2,
                }
            )
        return report, EXIT_OK

    if args.n is None:
        raise InvalidInput("cosets needs --n (or --m with --special)")
    system = CosetSystem(args.n, args.q)
    report = CodeReport("cosets", {"n": args.n, "q": args.q, "m": system.m})
    for s in system.X:
        report.add(
            {
                "leader": s,
                "size": len(system.cosets[s]),
                "symmetric": is_symmetric(system, s),
                "partner": system.partner[s],
                "in_Y": s in system.Y,
                "coset": list(system.cosets[s]),
            }
        )
    return report, EXIT_OK


def cmd_reversible(args):
    if args.count:
        if args.m is None:
            raise InvalidInput("--count needs --m")
        n = (args.q**args.m - 1) // 2
        count = count_reversible_closed_form(args.q, args.m)
        report = CodeReport("reversible", {"q": args.q, "m": args.m, "n": n, "count": True})
        system = CosetSystem(n, args.q)
        by_cosets = 2 ** len(system.Y) - 1
        record = {
            "n": n,
            "closed_form": count,
            "by_cosets": by_cosets,
            "only_x_plus_1": only_x_plus_1_self_reciprocal(field_of_order(args.q), n),
            "enumerated": None,
        }
        try:
            record["enumerated"] = len(enumerate_reversible(field_of_order(args.q), n, budget=args.budget))
        except (BudgetExceeded, InvalidInput) as err:
            log.warning(f"Enumeration skipped: {err}")
        report.add(record)
        agree = {v for v in (count, by_cosets, record["enumerated"]) if v is not None}
        return report, EXIT_OK if len(agree) == 1 else EXIT_MISMATCH

    if args.n is None:
        raise InvalidInput("reversible needs --n (or --count with --m)")
    field = field_of_order(args.q)
    report = CodeReport("reversible", {"n": args.n, "q": args.q})
    for code in enumerate_reversible(field, args.n, budget=args.budget):
        report.add(code_record(code))
    return report, EXIT_OK


def cmd_bch(args):
    field = field_of_order(args.q)
    if args.reversible:
        code = reversible_bch_generator(args.q, args.n, args.delta, field)
        d_lb = 2 * args.delta + 1
    else:
        code = bch_generator(BchSpec(args.q, args.n, args.delta, args.b), field)
        d_lb = args.delta
    inputs = {"q": args.q, "n": args.n, "delta": args.delta, "b": args.b, "reversible": args.reversible}
    report = CodeReport("bch", inputs)
    extra = {"d_lb": d_lb, "d": None, "mds": None, "bch_bound": None}
    if args.distance:
        extra.update(_distance_fields(code, args.budget, d_lb))
    elif 0 < code.k < code.n:
        extra["bch_bound"] = bch_bound(code)
    report.add(code_record(code, **extra))
    return report, EXIT_OK


def cmd_sweep(args):
    try:
        family = resolve_family(args.family)
    except ValueError as err:
        raise InvalidInput(str(err))
    params = {name: getattr(args, name) for name in FAMILIES[family][1]}
    missing = [name for name, value in params.items() if value is None]
    if missing:
        raise InvalidInput(f"{family} sweep needs --{' --'.join(missing)}")
    report = CodeReport("sweep", dict(params, family=family, q=args.q, distance=args.distance))
    rows = sweep_family(family, args.q, run_oracle=not args.no_oracle, distance=args.distance, budget=args.budget, **params)
    for row in rows:
        report.add(row.to_dict())
    return report, EXIT_OK


def cmd_mds(args):
    if args.table:
        rows = verify_table("mds")
        report = CodeReport("mds", {"table": True}, [row.to_dict() for row in rows])
        return report, EXIT_MISMATCH if any(row.status == MISMATCH for row in rows) else EXIT_OK
    if None in (args.q, args.n, args.rho):
        raise InvalidInput("mds needs --q, --n and --rho (or --table)")
    spec = MdsSpec(args.q, args.n, args.rho)
    code, params = construct_mds_lcd(spec, budget=args.budget)
    report = CodeReport("mds", {"q": args.q, "n": args.n, "rho": args.rho})
    report.add(code_record(code, params))
    return report, EXIT_OK


def cmd_distance(args):
    field = field_of_order(args.q)
    if (args.generator is None) == (args.defining_set is None):
        raise InvalidInput("distance needs exactly one of --generator and --defining-set")
    if args.generator is not None:
        code = from_generator(field, args.n, Poly(field, args.generator))
    else:
        code = from_defining_set(field, args.n, args.defining_set)
    report = CodeReport("distance", {"q": args.q, "n": args.n})
    fields = _distance_fields(code, args.budget)
    if args.certify and 0 < code.k < code.n:
        fields["mds"] = certify_mds(code, args.budget)
    params = CodeParams(code.n, code.k, fields["bch_bound"] or 1, fields["d"], fields["mds"])
    report.add(code_record(code, params, bch_bound=fields["bch_bound"]))
    return report, EXIT_OK


def cmd_verify(args):
    table_ids = list(TABLES) if args.table == "all" else [resolve_table(args.table)]
    report = CodeReport("verify", {"table": args.table})
    failed = False
    for table_id in table_ids:
        for row in verify_table(table_id):
            report.add(row.to_dict())
            failed = failed or row.status == MISMATCH
    flagged = sum(record["status"] == FLAGGED for record in report.records)
    log.info(f"verify {args.table}: {len(report.records)} rows, {flagged} flagged, {'FAIL' if failed else 'PASS'}")
    return report, EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {
    "factor": cmd_factor,
    "cosets": cmd_cosets,
    "reversible": cmd_reversible,
    "bch": cmd_bch,
    "sweep": cmd_sweep,
    "mds": cmd_mds,
    "distance": cmd_distance,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="write JSON instead of an aligned table")
    output.add_argument("--tsv", action="store_true", help="write tab-separated values")
    common.add_argument("--h5", metavar="FILE", help="also store the table in an HDF5 file")
    common.add_argument("--budget", type=int, help="search budget, overrides the configured one")
    common.add_argument("--threads", type=int, help="worker threads for exhaustive searches")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    parser = argparse.ArgumentParser(
        prog="negacode",
        description="Reversible, LCD and BCH negacyclic codes over odd-characteristic fields.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor x^n+1 into minimal polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("cosets", parents=[common], help="q-cyclotomic cosets of odd residues mod 2n")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, help="projective exponent, for --special")
    p.add_argument("--special", action="store_true", help="both readings of the half-size coset")

    p = sub.add_parser("reversible", parents=[common], help="list or count reversible codes")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, help="n = (q^m-1)/2, for --count")
    p.add_argument("--count", action="store_true", help="closed-form count instead of a listing")

    p = sub.add_parser("bch", parents=[common], help="build a negacyclic BCH code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1, help="odd starting exponent (default 1)")
    p.add_argument("--reversible", action="store_true", help="build C(q, n, 2 delta + 1, 1 - 2 delta)")
    p.add_argument("--distance", action="store_true", help="search for the exact distance")

    p = sub.add_parser("sweep", parents=[common], help="evaluate a family over its delta range")
    p.add_argument("family", help=f"one of {', '.join(FAMILIES)} (or {', '.join(FAMILY_ALIASES)})")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--tau", type=int)
    p.add_argument("--distance", action="store_true", help="exact distance where the budget allows")
    p.add_argument("--no-oracle", action="store_true", help="skip the constructive dimension check")

    p = sub.add_parser("mds", parents=[common], help="MDS LCD codes of length n | q-1")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--rho", type=int)
    p.add_argument("--table", action="store_true", help="recompute the published rows")

    p = sub.add_parser("distance", parents=[common], help="exact minimum distance of a code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generator", type=_int_list, help="generator coefficients, lowest degree first")
    p.add_argument("--defining-set", type=_int_list, help="odd residues mod 2n")
    p.add_argument("--certify", action="store_true", help="also certify MDS on the parity-check matrix")

    p = sub.add_parser("verify", parents=[common], help="recompute a golden table")
    p.add_argument("table", choices=list(TABLES) + list(TABLE_ALIASES) + ["all"])

    return parser


def write_report(report, args, stream=None):
    stream = sys.stdout if stream is None else stream
    if args.json:
        stream.write(report.to_json() + "\n")
    else:
        report.write_table(stream, "tab" if args.tsv else "fixed_width")
    if args.h5:
        report.write_hdf5(args.h5)


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        log.setLevel("DEBUG")
    elif args.quiet or args.json or args.tsv:
        # astropy sends INFO records to stdout
        log.setLevel("WARNING")

    with contextlib.ExitStack() as stack:
        if args.threads:
            stack.enter_context(conf.set_temp("threads", args.threads))
        try:
            if args.budget is not None and args.budget < 1:
                raise InvalidInput(f"--budget must be positive, got {args.budget}")
            report, status = COMMANDS[args.command](args)
        except (InvalidInput, BudgetExceeded) as err:
            log.error(f"{type(err).__name__}: {err}")
            return EXIT_INVALID
    write_report(report, args)
    return status


if __name__ == "__main__":
    sys.exit(main())
