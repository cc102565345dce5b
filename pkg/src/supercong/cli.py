"""Command-line driver: subcommands per verification family.

Exit codes: 0 all asserted checks pass, 1 any asserted FAIL, 2 bad
configuration.  Conjecture scans (corollary mod p^4, misprint fits) are
informational and never affect the exit code.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .runner import ConfigError, RunConfig, emit_report, run


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _parse_name_list(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Exact verification of finite-field hypergeometric supercongruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, max_prime: int):
        sp.add_argument("--max-prime", type=int, default=max_prime,
                        help=f"largest prime to scan (default {max_prime})")
        sp.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
        sp.add_argument("--format", dest="fmt", choices=("json", "csv", "human"),
                        default="human")
        sp.add_argument("--out", type=str, default=None, help="write the report to FILE")
        sp.add_argument("--no-timestamp", action="store_true",
                        help="omit timestamp and wall time (byte-stable output)")
        sp.add_argument("--force", action="store_true",
                        help="override desk-scale oracle guards")

    sp = sub.add_parser("corollary", help="Legendre-symbol supercongruence scan")
    common(sp, 5000)
    sp.add_argument("--mod-power", type=int, default=None,
                    help="check a single modulus power (default: 3 asserted and 4 informational)")

    sp = sub.add_parser("theorem", help="main congruence vs the character-sum oracle")
    common(sp, 31)
    sp.add_argument("--n", dest="n_list", type=_parse_int_list, default=(1, 2, 3, 4, 5),
                    help="comma-separated list of n values")
    sp.add_argument("--lambda", dest="lam", type=str, default="all",
                    help='"all" or a comma-separated list of units')

    sp = sub.add_parser("lemmas", help="Gamma-function lemmas and intermediate congruences")
    common(sp, 199)
    sp.add_argument("--n", dest="n_list", type=_parse_int_list, default=(1, 2, 3, 4))
    sp.add_argument("--lambda", dest="lam", type=str, default="all")
    sp.add_argument("--nasty", action="store_true",
                    help="also compare the exact Gamma-quotient expansion against the oracle")
    sp.add_argument("--k", type=int, default=3, help="precision for the --nasty comparison")

    sp = sub.add_parser("identities", help="harmonic-sum identities, recurrences, certificates")
    common(sp, 31)
    sp.add_argument("--ids", type=_parse_name_list, default=None,
                    help='"all" or a list of identity/recurrence names')
    sp.add_argument("--certs", type=_parse_name_list, default=None,
                    help='"all" or a list of certificate names')
    sp.add_argument("--max-n", dest="max_n", type=int, default=None)

    sp = sub.add_parser("report", help="run every family and render figures")
    common(sp, 31)
    sp.add_argument("--n", dest="n_list", type=_parse_int_list, default=(1, 2, 3, 4, 5))
    sp.add_argument("--lambda", dest="lam", type=str, default="all")
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--max-n", dest="max_n", type=int, default=None)
    sp.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    sp.add_argument("--figures-dir", type=str, default=None,
                    help="directory for PNGs (default: alongside --out)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    lam = getattr(args, "lam", "all")
    if lam == "all":
        policy, lam_list = "all", ()
    else:
        policy, lam_list = "list", _parse_int_list(lam)
        if not lam_list:
            raise ConfigError('--lambda must be "all" or a nonempty integer list')
    return RunConfig(
        command=args.command,
        max_prime=args.max_prime,
        mod_power=getattr(args, "mod_power", None),
        n_list=tuple(getattr(args, "n_list", (1, 2, 3, 4, 5))),
        lambda_policy=policy,
        lambda_list=lam_list,
        ids=getattr(args, "ids", None),
        certs=getattr(args, "certs", None),
        max_n=getattr(args, "max_n", None),
        jobs=args.jobs,
        fmt=args.fmt,
        force=args.force,
        no_timestamp=args.no_timestamp,
        nasty=getattr(args, "nasty", False),
        k=getattr(args, "k", 3),
        out=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        report = run(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    payload = emit_report(report, cfg.fmt)
    if cfg.out:
        Path(cfg.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
    if args.command == "report" and not getattr(args, "no_figures", False):
        from .figures import render_report_figures

        if getattr(args, "figures_dir", None):
            directory = Path(args.figures_dir)
        elif cfg.out:
            directory = Path(cfg.out).parent
        else:
            directory = Path("report_figures")
        stem = Path(cfg.out).stem if cfg.out else "report"
        for png in render_report_figures(report, directory, stem):
            print(f"figure: {png}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
