"""Command line interface: ``gaugeverify verify|derive|dump-ideal|dump-chart``."""

import argparse
import sys

from . import appendix
from .charts import WEIGHT_21, Base, build_gauge, build_multichart, canonical_label, MULTICHART_LABELS
from .monodromy import (GenericityError, MonodromyConfig, derive_le_ideal, k_ideal, table_ideal,
                        weight_key)
from .polyring import dump_ideal, ideal_equal, ideal_saturate_ideal
from .verifier import GROUPS, ConfigError, RunConfig, expand_checks, run_all

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _config_from_args(args):
    config = RunConfig.from_toml(args.config) if args.config else RunConfig()
    if args.command_group != "all":
        config.checks = tuple(k for k in config.checks if k in GROUPS[args.command_group])
    if args.checks is not None:
        config.checks = expand_checks(args.checks)
    if args.p is not None:
        config.p = args.p
        config.primes = (args.p,)
    if args.primes:
        config.primes = tuple(args.primes)
    if args.f is not None:
        config.f = args.f
        if len(config.nilpotent) != args.f:
            config.nilpotent = (False,) * args.f
    if args.kappa:
        config.kappas = tuple(args.kappa)
    if args.triple:
        config.triples = tuple(tuple(t) for t in args.triple)
    if args.seed is not None:
        config.seed = args.seed
    if args.trials is not None:
        config.trials = args.trials
    return config.validate()


def cmd_verify(args):
    try:
        config = _config_from_args(args)
    except ConfigError as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG

    def progress(jid, es):
        if not args.quiet:
            bad = sum(e.verdict == "fail" for e in es)
            print("%-60s %s" % (jid, "FAIL(%d)" % bad if bad else "ok"), file=sys.stderr)

    report = run_all(config, jobs=args.jobs, progress=progress)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    if args.junit:
        with open(args.junit, "w") as fh:
            fh.write(report.to_junit())
    for e in report.failures():
        print("FAIL %s: %s %s %s" % (e.check, e.anchor, e.params, e.detail))
    s = report.summary()
    print("%d entries: %d pass, %d fail, %d skip" % (s["total"], s["pass"], s["fail"], s["skip"]))
    return EXIT_OK if report.ok else EXIT_FAIL


def _check_kappa(kappa, p, symbolic):
    try:
        MonodromyConfig(kappa, p).validate()
    except GenericityError as e:
        raise ConfigError(str(e))


def _derive(label, weight, p, kappa, symbolic):
    base = Base(p, symbolic)
    if weight == "le":
        return derive_le_ideal(build_gauge(label, base), kappa, (3, 0))
    if weight == "21":
        return derive_le_ideal(build_gauge(label, base, (2, 1)), kappa, (2, 1))
    le = derive_le_ideal(build_gauge(label, base), kappa, (3, 0))
    if label not in WEIGHT_21:
        return le
    I21 = derive_le_ideal(build_gauge(label, base, (2, 1)), kappa, (2, 1))
    return ideal_saturate_ideal(le, I21)


def cmd_derive(args):
    try:
        label = canonical_label(args.gauge)
        weight = weight_key(args.weight)
        _check_kappa(args.kappa, args.p, args.symbolic)
    except (ValueError, KeyError, ConfigError) as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG
    I = _derive(label, weight, args.p, args.kappa, args.symbolic)
    header = [("gauge", label), ("weight", weight), ("p", "symbol" if args.symbolic else args.p),
              ("kappa", args.kappa)]
    sys.stdout.write(dump_ideal(I, header=header))
    if args.compare_appendix:
        g = build_gauge(label, Base(args.p, args.symbolic))
        T = table_ideal(g, weight, args.kappa, verbatim=args.printed)
        same = ideal_equal(I, T)
        print("# matches table%s: %s" % (" (as printed)" if args.printed else "", "yes" if same else "no"))
        return EXIT_OK if same else EXIT_FAIL
    return EXIT_OK


def cmd_dump_ideal(args):
    try:
        label = canonical_label(args.gauge)
        weight = weight_key(args.weight)
    except (ValueError, KeyError) as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG
    g = build_gauge(label, Base(args.p, args.symbolic))
    I = table_ideal(g, weight, args.kappa, verbatim=args.printed)
    header = [("gauge", label), ("weight", weight), ("table", "printed" if args.printed else "corrected"),
              ("kappa", args.kappa)]
    sys.stdout.write(dump_ideal(I, header=header, basis=not args.generators))
    return EXIT_OK


def cmd_dump_chart(args):
    try:
        chart = canonical_label(args.chart)
        if chart not in MULTICHART_LABELS:
            raise ValueError("no multi-type chart for %s" % chart)
        mc = build_multichart(chart, Base(args.p, args.symbolic))
        if args.gauge is None:
            for i in range(2):
                for k in range(2):
                    print("Psi v^3 [%d,%d] = %s" % (i, k, mc.matrix[i, k]))
            print("gauges: %s" % ", ".join(mc.gauges()))
            return EXIT_OK
        gauge = canonical_label(args.gauge)
        if gauge not in mc.gauges():
            raise ValueError("gauge %s does not project from chart %s" % (gauge, chart))
        weight = weight_key(args.weight)
    except (ValueError, KeyError) as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG
    K = k_ideal(mc, gauge, weight, args.kappa)
    header = [("chart", chart), ("gauge", gauge), ("weight", weight), ("kappa", args.kappa)]
    sys.stdout.write(dump_ideal(K, header=header))
    key = (chart, gauge, weight, "")
    if key in appendix.MULTI_TABLES:
        same = ideal_equal(K, appendix.multi_ideal(key, mc.namespace(), mc.roster, args.kappa))
        print("# matches displayed K-ideal: %s" % ("yes" if same else "no"))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="gaugeverify",
                                 description="Exact checks of local-model ideals and their combinatorics.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the assertion ledger")
    v.add_argument("command_group", choices=["all"] + sorted(GROUPS))
    v.add_argument("--config", help="TOML file with [run], [rho_bar], [kappa], [checks]")
    v.add_argument("--checks", nargs="*", help="restrict to these check kinds or groups")
    v.add_argument("--p", type=int)
    v.add_argument("--primes", type=int, nargs="+")
    v.add_argument("--f", type=int)
    v.add_argument("--kappa", type=int, nargs="+")
    v.add_argument("--triple", type=int, nargs=3, action="append", metavar=("KU", "KPLUS", "KMINUS"))
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--json")
    v.add_argument("--junit")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("derive", help="derive a fixed-weight ideal of a gauge chart")
    d.add_argument("--gauge", required=True)
    d.add_argument("--weight", required=True, choices=["le30", "21", "30"])
    d.add_argument("--p", type=int, default=23)
    d.add_argument("--kappa", type=int, required=True)
    d.add_argument("--symbolic", action="store_true", help="keep p as a variable")
    d.add_argument("--compare-appendix", action="store_true")
    d.add_argument("--printed", action="store_true", help="compare with the table as printed")
    d.set_defaults(func=cmd_derive)

    i = sub.add_parser("dump-ideal", help="dump a tabulated gauge ideal")
    i.add_argument("--gauge", required=True)
    i.add_argument("--weight", required=True, choices=["le30", "21", "30"])
    i.add_argument("--p", type=int, default=23)
    i.add_argument("--kappa", type=int, default=9)
    i.add_argument("--symbolic", action="store_true")
    i.add_argument("--printed", action="store_true")
    i.add_argument("--generators", action="store_true", help="print generators instead of the basis")
    i.set_defaults(func=cmd_dump_ideal)

    c = sub.add_parser("dump-chart", help="dump a multi-type chart or a K-ideal on it")
    c.add_argument("--chart", required=True)
    c.add_argument("--gauge")
    c.add_argument("--weight", default="30", choices=["21", "30"])
    c.add_argument("--p", type=int, default=23)
    c.add_argument("--kappa", type=int, default=9)
    c.add_argument("--symbolic", action="store_true")
    c.set_defaults(func=cmd_dump_chart)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
