"""Command line front end.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails and 2 for usage or parse errors.
"""

import argparse
import json
import sys

from . import sxp
from .littlewood import core_quotient, zasym_witness
from .partitions import enumerate_z_asymmetric, format_partition, parse_partition, z_asymmetric_counts
from .symfunc import DegreeLimitError, render, set_max_degree, get_max_degree, verschiebung
from .universal import (
    FAMILY_ALIASES,
    factor_classical,
    factor_verschiebung,
    family_name,
    hamel_king,
    universal_char,
)
from .verify import run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values may legitimately start with "-"
_VALUE_OPTIONS = {"--z", "--lambda", "--mu", "--tau", "--inner", "--t"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _t_value(text):
    try:
        t = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"t must be an integer, got {text!r}")
    if t < 2:
        raise argparse.ArgumentTypeError(f"t must be >= 2, got {t}")
    return t


def _t_list(text):
    return tuple(_t_value(x) for x in text.split(",") if x)


def _int_range(text):
    """"a..b" inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}")


def _glue_values(argv):
    """Turn ``--z -2..4`` into ``--z=-2..4`` so argparse does not read -2..4 as a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1] != "-" and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _global_options(suppress):
    # subcommands repeat the global flags with suppressed defaults so that a
    # flag given before the subcommand is not reset by the subparser
    common = _Parser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common.add_argument("--json", action="store_true", default=default(True), help="JSON output (default)")
    common.add_argument("--pretty", action="store_true", default=default(False), help="indent the JSON")
    common.add_argument("--max-degree", type=int, default=default(None),
                        help="degree cap for symmetric functions")
    return common


def build_parser():
    common = _global_options(suppress=True)
    parser = _Parser(prog="verschiebung", parents=[_global_options(suppress=False)],
                     description="Littlewood decomposition, universal characters and phi_t factorizations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common], help="t-core, t-quotient and kappa vector")
    p.add_argument("partition", type=_partition)
    p.add_argument("--t", type=_t_value, required=True)

    p = sub.add_parser("zasym", parents=[common], help="z-asymmetric partitions and witnesses")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--max-size", type=int, default=10)
    p.add_argument("--lambda", dest="lam", type=_partition, help="extract a witness for this partition")
    p.add_argument("--t", type=_t_value, default=2)

    p = sub.add_parser("factorize", parents=[common], help="phi_t of X_lam(z;q) or a classical character")
    p.add_argument("partition", type=_partition)
    p.add_argument("--t", type=_t_value, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--z", type=int)
    group.add_argument("--family", choices=sorted(FAMILY_ALIASES))
    p.add_argument("--expand", action="store_true", help="also expand both sides in the Schur basis")

    p = sub.add_parser("character", parents=[common], help="universal character or X_lam(z;q)")
    p.add_argument("family", help="sp, o, so+, so- or chi")
    p.add_argument("partition", type=_partition)
    p.add_argument("--z", type=int, help="z for the chi family")
    p.add_argument("--method", default="det", choices=("det", "skew"))
    p.add_argument("--basis", default="s", choices=("s", "h", "e", "p", "m"))

    p = sub.add_parser("sxp", parents=[common], help="plethysm by p_t")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--t", type=_t_value, required=True)
    p.add_argument("--rule", default="schur", choices=("schur", "wildon", "universal-so"))
    p.add_argument("--tau", type=_partition, default=())
    p.add_argument("--inner", type=_partition, default=())

    p = sub.add_parser("chi", parents=[common], help="symmetric group character value")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--inner", type=_partition, default=(), help="inner shape for a skew character")

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=list(suite_names()) + ["all"])
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--t", dest="ts", type=_t_list, default=None)
    p.add_argument("--z", dest="zs", type=_int_range, default=None)
    p.add_argument("--quick", action="store_true")
    return parser


def _symfunc_json(f, basis="s"):
    g = f.to(basis)
    return {"text": render(g), **g.to_json()}


def cmd_decompose(args):
    return core_quotient(args.partition, args.t).to_json(), EXIT_OK


def cmd_zasym(args):
    found = enumerate_z_asymmetric(args.z, args.max_size)
    out = {"z": args.z, "max_size": args.max_size,
           "counts": z_asymmetric_counts(args.z, args.max_size),
           "partitions": [list(lam) for lam in found]}
    if args.lam is not None:
        w = zasym_witness(args.lam, args.z, args.t)
        out["witness"] = None if w is None else w.to_json()
    return out, EXIT_OK


def cmd_factorize(args):
    if args.family is not None:
        res = factor_classical(args.partition, args.t, args.family)
        lhs_char = universal_char(family_name(args.family), args.partition)
    else:
        res = factor_verschiebung(args.partition, args.z, args.t)
        lhs_char = hamel_king(args.partition, args.z)
    out = {"lambda": list(args.partition), "t": args.t, **res.to_json()}
    if args.z is not None:
        out["z"] = args.z
    if args.expand:
        lhs = verschiebung(lhs_char, args.t)
        rhs = res.expand()
        out["lhs"] = render(lhs.to("s"))
        out["rhs"] = render(rhs.to("s"))
        out["equal"] = lhs.to("h") == rhs.to("h")
        return out, EXIT_OK if out["equal"] else EXIT_FAIL
    return out, EXIT_OK


def cmd_character(args):
    if args.family == "chi":
        if args.z is None:
            raise UsageError("the chi family needs --z")
        f = hamel_king(args.partition, args.z, method=args.method)
        name = f"chi(z={args.z})"
    else:
        try:
            name = family_name(args.family)
        except (KeyError, ValueError):
            raise UsageError(f"unknown family {args.family!r}")
        f = universal_char(name, args.partition, method=args.method)
    return {"family": name, "lambda": list(args.partition), **_symfunc_json(f, args.basis)}, EXIT_OK


def cmd_sxp(args):
    out = {"lambda": list(args.lam), "t": args.t, "rule": args.rule}
    if args.rule == "schur":
        out["terms"] = [term.to_json() for term in sxp.sxp_schur(args.lam, args.t)]
    elif args.rule == "wildon":
        coeffs = sxp.sxp_wildon(args.tau, (args.lam, args.inner), args.t)
        out.update({"tau": list(args.tau), "inner": list(args.inner),
                    "terms": [{"nu": list(nu), "coeff": c} for nu, c in coeffs.items()]})
    else:
        coeffs = sxp.universal_sxp(args.lam, "so_plus", args.t)
        out["terms"] = [{"mu": list(mu), "coeff": c} for mu, c in coeffs.items()]
    return out, EXIT_OK


def cmd_chi(args):
    if args.inner:
        return sxp.chi_skew((args.lam, args.inner), args.mu), EXIT_OK
    return sxp.chi(args.lam, args.mu), EXIT_OK


def cmd_verify(args):
    names = list(suite_names()) if args.suite == "all" else [args.suite]
    bounds = {"max_size": args.max_size, "ts": args.ts, "zs": args.zs}
    reports = []
    for name in names:
        rep = run_suite(name, quick=args.quick, **bounds)
        print(f"{name}: {rep.instances} instances, {len(rep.failures)} failures, "
              f"{rep.seconds:.2f}s", file=sys.stderr)
        reports.append(rep)
    ok = all(r.ok for r in reports)
    out = reports[0].to_json() if len(reports) == 1 else {"ok": ok, "suites": [r.to_json() for r in reports]}
    return out, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "decompose": cmd_decompose,
    "zasym": cmd_zasym,
    "factorize": cmd_factorize,
    "character": cmd_character,
    "sxp": cmd_sxp,
    "chi": cmd_chi,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
        if args.command is None:
            raise UsageError("missing subcommand")
    except UsageError as exc:
        print(f"verschiebung: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    old_cap = get_max_degree()
    if args.max_degree is not None:
        set_max_degree(args.max_degree)
    try:
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"verschiebung: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegreeLimitError as exc:
        print(f"verschiebung: degree limit: {exc} (raise it with --max-degree)", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"verschiebung: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_max_degree(old_cap)
    print(json.dumps(out, indent=2 if args.pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
