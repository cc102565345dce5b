"""Report figures: rendered PNG summaries alongside the delimited output.

Kept out of the verification core; everything here is presentation of
already-computed pass/fail data.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .runner import RunReport  # noqa: E402

_STATUS_COLORS = {"PASS": "#2a9d4e", "FAIL": "#d62728", "SKIPPED": "#9a9a9a"}


def render_summary(report: RunReport, path: Path) -> Path:
    """Stacked horizontal bars of pass/fail/skipped counts per family."""
    families: dict[str, dict[str, int]] = {}
    for c in report.checks:
        counts = families.setdefault(c.family, {"PASS": 0, "FAIL": 0, "SKIPPED": 0})
        counts[c.status] += 1
    names = sorted(families)
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(names) + 1.2))
    left = [0] * len(names)
    for status in ("PASS", "FAIL", "SKIPPED"):
        widths = [families[f][status] for f in names]
        ax.barh(names, widths, left=left, color=_STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.set_xlabel("checks")
    ax.set_title("verification outcomes by family")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_corollary_scan(report: RunReport, path: Path) -> Path | None:
    """Per-prime status markers of the corollary scan, one row per modulus power."""
    rows: dict[int, list[tuple[int, str]]] = {}
    for c in report.checks:
        if c.family == "corollary":
            rows.setdefault(c.inputs.get("k", 0), []).append((c.inputs["p"], c.status))
    if not rows:
        return None
    fig, ax = plt.subplots(figsize=(8, 2.4))
    for level, (k, points) in enumerate(sorted(rows.items())):
        xs = [p for p, _ in points]
        colors = [_STATUS_COLORS[s] for _, s in points]
        ax.scatter(xs, [level] * len(xs), c=colors, s=6, marker="|")
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([f"mod p^{k}" for k in sorted(rows)])
    ax.set_xlabel("prime p")
    ax.set_title("corollary scan status by prime")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_report_figures(report: RunReport, directory: Path, stem: str) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = [render_summary(report, directory / f"{stem}_summary.png")]
    scan = render_corollary_scan(report, directory / f"{stem}_corollary.png")
    if scan is not None:
        written.append(scan)
    return written
