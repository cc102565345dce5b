"""Batch execution of verification families with deterministic reports.

Work is partitioned into independent tasks (one per prime, or per
identity index), optionally executed by a process pool, and merged in
canonical order; identical configurations therefore produce
byte-identical JSON/CSV reports, serial or parallel.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .checks import CheckReport, FAIL
from .congruences import (
    CongruenceInput,
    assembly_check,
    corollary_check,
    nasty_check,
    theorem_check,
    xd_check,
    yp_check,
)
from .cyclotomic import DEFAULT_INT_GUARD
from .identities import (
    CERTIFICATES,
    IdentityId,
    RecurrenceId,
    verify_certificate,
    verify_identity,
    verify_recurrence,
    verify_solutions,
)
from .modarith import odd_primes_up_to
from .padic import verify_lemma_bc, verify_lemma_har

HAR_PRIME_CAP = 97  # O(p^3) Gamma tables; criterion range for the G1/G2 lemma
ASSEMBLY_PRIME_CAP = 31  # kernel-vs-binomial sweeps stay at oracle scale
NASTY_PRIME_CAP = 31

DEFAULT_IDENTITY_N = 200
DEFAULT_RECURRENCE_N = 100
DEFAULT_SOLUTIONS_N = 50
DEFAULT_CERT_N = 60


class ConfigError(ValueError):
    """Invalid run configuration (CLI exit code 2)."""


@dataclass
class RunConfig:
    command: str
    max_prime: int = 31
    mod_power: int | None = None
    n_list: tuple[int, ...] = (1, 2, 3, 4, 5)
    lambda_policy: str = "all"  # "all" or "list"
    lambda_list: tuple[int, ...] = ()
    ids: tuple[str, ...] | None = None
    certs: tuple[str, ...] | None = None
    max_n: int | None = None
    jobs: int = 1
    fmt: str = "human"
    force: bool = False
    no_timestamp: bool = False
    nasty: bool = False
    k: int = 3
    out: str | None = None

    def validate(self):
        if self.max_prime < 3:
            raise ConfigError("--max-prime must be >= 3")
        if self.mod_power is not None and not 1 <= self.mod_power <= 5:
            raise ConfigError("--mod-power must lie in 1..5")
        if self.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if self.fmt not in ("json", "csv", "human"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if not 1 <= self.k <= 5:
            raise ConfigError("--k must lie in 1..5")
        if any(n < 1 for n in self.n_list):
            raise ConfigError("--n entries must be >= 1")
        if self.max_n is not None and self.max_n < 1:
            raise ConfigError("--max-n must be >= 1")

    def lambdas(self, p: int) -> list[int]:
        if self.lambda_policy == "all":
            return list(range(1, p))
        return [lam for lam in self.lambda_list if 1 <= lam < p]

    def echo(self) -> dict:
        return {
            "command": self.command,
            "max_prime": self.max_prime,
            "mod_power": self.mod_power,
            "n_list": list(self.n_list),
            "lambda": "all" if self.lambda_policy == "all" else list(self.lambda_list),
            "ids": list(self.ids) if self.ids is not None else "default",
            "certs": list(self.certs) if self.certs is not None else "default",
            "max_n": self.max_n,
            "format": self.fmt,
            "force": self.force,
            "nasty": self.nasty,
            "k": self.k,
        }


@dataclass
class RunReport:
    config: dict
    checks: list[CheckReport]
    summary: dict = field(default_factory=dict)
    wall_time_s: float | None = None
    version: str = __version__
    timestamp: str | None = None

    @classmethod
    def build(cls, config: RunConfig, checks: list[CheckReport], wall: float | None) -> "RunReport":
        summary = {
            "pass": sum(1 for c in checks if c.status == "PASS"),
            "fail": sum(1 for c in checks if c.status == "FAIL"),
            "skipped": sum(1 for c in checks if c.status == "SKIPPED"),
        }
        timestamp = None
        if not config.no_timestamp:
            timestamp = datetime.now(timezone.utc).isoformat()
        return cls(
            config=config.echo(),
            checks=checks,
            summary=summary,
            wall_time_s=None if config.no_timestamp else wall,
            timestamp=timestamp,
        )

    @property
    def exit_code(self) -> int:
        asserted_failures = sum(
            1 for c in self.checks if c.status == FAIL and not c.informational
        )
        return 1 if asserted_failures else 0


# ---------------------------------------------------------------------------
# task plan

def _lambda_spec(cfg: RunConfig):
    return "all" if cfg.lambda_policy == "all" else tuple(cfg.lambda_list)


def plan_tasks(cfg: RunConfig) -> list[tuple]:
    """Expand a config into an ordered list of independent tasks."""
    cmd = cfg.command
    tasks: list[tuple] = []
    if cmd in ("corollary", "report"):
        ks = (3, 4) if cfg.mod_power is None else (cfg.mod_power,)
        for p in odd_primes_up_to(cfg.max_prime if cmd == "corollary" else 5000):
            for k in ks:
                tasks.append(("corollary", p, k))
    if cmd in ("theorem", "report"):
        max_p = cfg.max_prime if cmd == "theorem" else 31
        guard = max(max_p, DEFAULT_INT_GUARD) if cfg.force else DEFAULT_INT_GUARD
        if max_p > guard:
            raise ConfigError(
                f"--max-prime {max_p} exceeds the oracle guard {guard}; pass --force"
            )
        for p in odd_primes_up_to(max_p):
            tasks.append(("theorem", p, cfg.n_list, _lambda_spec(cfg), guard))
    if cmd in ("lemmas", "report"):
        max_p = cfg.max_prime if cmd == "lemmas" else 199
        for p in odd_primes_up_to(max_p):
            tasks.append(("lemma_bc", p))
            if p <= HAR_PRIME_CAP:
                tasks.append(("lemma_har", p))
            tasks.append(("yeah", p, cfg.n_list))
            if 7 <= p <= ASSEMBLY_PRIME_CAP:
                tasks.append(("assembly", p, cfg.n_list, _lambda_spec(cfg)))
            if (cfg.nasty or cmd == "report") and p <= NASTY_PRIME_CAP:
                tasks.append(("nasty", p, cfg.n_list, cfg.k, _lambda_spec(cfg)))
    if cmd == "report":
        for p in odd_primes_up_to(499):
            tasks.append(("xd", p))
            tasks.append(("yp", p))
    if cmd in ("identities", "report"):
        id_max = cfg.max_n or DEFAULT_IDENTITY_N
        rec_max = cfg.max_n or DEFAULT_RECURRENCE_N
        sol_max = cfg.max_n or DEFAULT_SOLUTIONS_N
        cert_max = cfg.max_n or DEFAULT_CERT_N
        explicit = cfg.ids is not None or cfg.certs is not None
        names = set(cfg.ids or ())
        run_all = not explicit or (cfg.ids is not None and "all" in {s.lower() for s in names})
        ident_names = {i.value for i in IdentityId}
        rec_names = {r.value for r in RecurrenceId}
        for ident in IdentityId:
            if run_all or ident.value in names:
                tasks.append(("identity", ident.value, id_max))
        for rec in RecurrenceId:
            if run_all or rec.value in names:
                tasks.append(("recurrence", rec.value, rec_max))
        if run_all or "SOLUTIONS" in names:
            tasks.append(("solutions", sol_max))
        cert_names = set(cfg.certs or ())
        run_all_certs = (not explicit and cfg.certs is None) or (
            cfg.certs is not None and "all" in {s.lower() for s in cert_names}
        )
        for cid in CERTIFICATES:
            if run_all_certs or cid in cert_names:
                tasks.append(("certificate", cid, cert_max))
        unknown = names - ident_names - rec_names - {"SOLUTIONS"} - {"all", "ALL"}
        if cfg.ids is not None and unknown:
            raise ConfigError(f"unknown --ids entries: {sorted(unknown)}")
        if cfg.certs is not None and cert_names - set(CERTIFICATES) - {"all", "ALL"}:
            raise ConfigError(f"unknown --certs entries: {sorted(cert_names - set(CERTIFICATES))}")
    if not tasks:
        raise ConfigError(f"nothing to run for command {cmd!r}")
    return tasks


def execute_task(task: tuple) -> list[CheckReport]:
    """Run one independent task; must stay importable for process pools."""
    kind = task[0]
    if kind == "corollary":
        _, p, k = task
        return [corollary_check(p, k)]
    if kind == "theorem":
        _, p, n_list, lam_spec, guard = task
        lams = range(1, p) if lam_spec == "all" else [x for x in lam_spec if 1 <= x < p]
        return [
            theorem_check(CongruenceInput(p, n, lam), p_guard=guard)
            for n in n_list
            for lam in lams
        ]
    if kind == "lemma_bc":
        return [verify_lemma_bc(task[1])]
    if kind == "lemma_har":
        return [verify_lemma_har(task[1])]
    if kind == "yeah":
        _, p, n_list = task
        from .congruences import yeah_check

        return [yeah_check(p, n) for n in n_list]
    if kind == "assembly":
        _, p, n_list, lam_spec = task
        lams = range(1, p) if lam_spec == "all" else [x for x in lam_spec if 1 <= x < p]
        return [
            assembly_check(CongruenceInput(p, n, lam))
            for n in n_list
            if n % 2 == 1
            for lam in lams
        ]
    if kind == "nasty":
        _, p, n_list, k, lam_spec = task
        lams = range(1, p) if lam_spec == "all" else [x for x in lam_spec if 1 <= x < p]
        return [
            nasty_check(n, lam, p, k)
            for n in n_list
            if n % 2 == 1
            for lam in lams
        ]
    if kind == "xd":
        return [xd_check(task[1])]
    if kind == "yp":
        return [yp_check(task[1])]
    if kind == "identity":
        return [verify_identity(IdentityId(task[1]), task[2])]
    if kind == "recurrence":
        return [verify_recurrence(RecurrenceId(task[1]), task[2])]
    if kind == "solutions":
        return [verify_solutions(task[1])]
    if kind == "certificate":
        return [verify_certificate(CERTIFICATES[task[1]], task[2])]
    raise ValueError(f"unknown task kind {kind!r}")


def run(cfg: RunConfig) -> RunReport:
    cfg.validate()
    tasks = plan_tasks(cfg)
    start = time.monotonic()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(execute_task, tasks))
    else:
        chunks = [execute_task(t) for t in tasks]
    checks = [c for chunk in chunks for c in chunk]
    return RunReport.build(cfg, checks, wall=round(time.monotonic() - start, 3))


# ---------------------------------------------------------------------------
# serialization

_CSV_FIELDS = (
    "family", "p", "n", "lambda", "k", "id", "modulus",
    "lhs", "rhs", "status", "informational", "note",
)


def _as_str(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    return str(v)


def check_row(check: CheckReport) -> dict[str, str]:
    inputs = check.inputs
    return {
        "family": check.family,
        "p": _as_str(inputs.get("p")),
        "n": _as_str(inputs.get("n", inputs.get("n_max"))),
        "lambda": _as_str(inputs.get("lambda")),
        "k": _as_str(inputs.get("k")),
        "id": _as_str(inputs.get("id")),
        "modulus": _as_str(check.modulus),
        "lhs": _as_str(check.lhs),
        "rhs": _as_str(check.rhs),
        "status": check.status,
        "informational": "1" if check.informational else "0",
        "note": check.note,
    }


def emit_report(report: RunReport, fmt: str) -> bytes:
    """Serialize a report; byte-stable for a fixed config and version."""
    if fmt == "json":
        doc = {
            "version": report.version,
            "config": report.config,
            "checks": [check_row(c) for c in report.checks],
            "summary": report.summary,
        }
        if report.timestamp is not None:
            doc["timestamp"] = report.timestamp
        if report.wall_time_s is not None:
            doc["wall_time_s"] = report.wall_time_s
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for c in report.checks:
            writer.writerow(check_row(c))
        return buf.getvalue().encode()
    if fmt == "human":
        lines = [f"supercong {report.version} - {report.config['command']}"]
        if report.timestamp:
            lines.append(f"started {report.timestamp}")
        for c in report.checks:
            row = check_row(c)
            where = " ".join(
                f"{k}={row[k]}" for k in ("p", "n", "lambda", "k", "id") if row[k]
            )
            tag = " [info]" if c.informational else ""
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"{c.status:7s} {c.family:12s} {where}{tag}{note}")
        s = report.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
        if report.wall_time_s is not None:
            lines.append(f"wall time: {report.wall_time_s}s")
        return ("\n".join(lines) + "\n").encode()
    raise ConfigError(f"unknown format {fmt!r}")


def parse_report_csv(data: bytes) -> list[dict[str, str]]:
    """Inverse of the CSV emitter, for the tabular subset of a report."""
    reader = csv.DictReader(io.StringIO(data.decode()))
    return list(reader)
