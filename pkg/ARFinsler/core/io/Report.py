#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Report.py - the analysis report, as text, colored console output and JSON

Only ``timing`` varies between two runs on the same input; ``to_dict`` and
``to_json`` leave it out unless asked.
"""
# --- standard Python modules ---
import json
import typing as t
from dataclasses import dataclass, field

# --- 3rd party modules ---
from colorama import Fore, Style

# --- this application's modules ---
from ..utils.lookfordependency import pandas_if_available, rich_if_available
from ..ar.Records import FAILS, HOLDS, VerificationReport

RICH, rich = rich_if_available()
if RICH:
    from rich.console import Console
    from rich.table import Table
_PANDAS, pd = pandas_if_available()

# ------------------------------------------------------------------------------

SCHEMA_VERSION = 1

_STATUS_COLOR = {HOLDS: Fore.GREEN, FAILS: Fore.RED}
_RICH_STATUS = {HOLDS: "green", FAILS: "bold red"}


def metric_echo(metric, description: str = "") -> t.Dict[str, t.Any]:
    "name, family, dimension, kernel and F^2 of a FinslerMetric"
    kernel = metric.kernel
    rf = kernel.rf
    return {
        "name": metric.name,
        "family": metric.family,
        "n": metric.n,
        "kernel": {"m": kernel.m, "A": rf.render(kernel.A)},
        "F2": metric.F2.render(),
        "conic": metric.conic,
        "description": description,
    }


@dataclass
class AnalysisReport:
    """
    Everything one analysis produces. ``ar`` is None for non-AR metrics,
    otherwise {"theta_deg": k, "a": {index: entry}}.
    """

    metric: t.Dict[str, t.Any]
    verification: VerificationReport
    ar: t.Optional[t.Dict[str, t.Any]] = None
    rationality: t.Dict[str, t.Dict[str, t.Any]] = field(default_factory=dict)
    comparisons: t.List[t.Dict[str, t.Any]] = field(default_factory=list)
    warnings: t.List[str] = field(default_factory=list)
    oracle: t.Optional[t.Dict[str, t.Any]] = None
    tensors: t.Dict[str, t.Dict[str, str]] = field(default_factory=dict)
    timing: t.Dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.oracle is not None and not self.oracle.get("passed", True):
            return False
        return self.verification.ok

    @property
    def failures(self) -> t.List[str]:
        out = [f"{r.claim_id}: {r.detail}" for r in self.verification.failures]
        if self.oracle is not None and not self.oracle.get("passed", True):
            points, required = self.oracle["points"], self.oracle.get("required", 1)
            if points < required:
                out.append(
                    f"oracle: {points} of {required} required points evaluated"
                    f" ({self.oracle['skipped']} skipped)"
                )
            else:
                out.append("oracle: numeric cross-check exceeds tolerance")
        return out

    @property
    def findings(self) -> t.List[str]:
        return list(self.verification.findings)

    def to_dict(self, include_timing: bool = False) -> t.Dict[str, t.Any]:
        verification = self.verification.to_dict()
        out = {
            "schema": SCHEMA_VERSION,
            "metric": self.metric,
            "ar": self.ar,
            "rationality": self.rationality,
            "claims": verification["records"],
            "facts": verification["facts"],
            "findings": verification["findings"],
            "printed": self.comparisons,
            "warnings": list(self.warnings),
            "oracle": self.oracle,
            "ok": self.ok,
        }
        if self.tensors:
            out["tensors"] = self.tensors
        if include_timing:
            out["timing"] = {k: round(v, 6) for k, v in sorted(self.timing.items())}
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2) + "\n"

    def claims_frame(self):
        """
        Claim table as a pandas DataFrame (list of dicts without pandas).
        """
        rows = [r.to_dict() for r in self.verification.records]
        rows.sort(key=lambda r: r["claim"])
        if not _PANDAS:
            return rows
        return pd.DataFrame(rows).set_index("claim")

    # text forms
    def _lines(self, colored: bool) -> t.List[str]:
        def paint(color, text):
            return f"{color}{text}{Style.RESET_ALL}" if colored else text

        m = self.metric
        lines = [
            paint(Fore.YELLOW, "*" * 78),
            paint(Fore.CYAN, f"metric {m['name']} ({m['family']}, n = {m['n']})"),
            paint(Fore.YELLOW, "*" * 78),
            f"kernel: m = {m['kernel']['m']}, A = {m['kernel']['A']}",
            f"F^2 = {m['F2']}",
        ]
        if self.ar is None:
            lines.append("AR: no")
        else:
            lines.append(f"AR: yes, eta = theta^{self.ar['theta_deg']}")
            for idx, entry in sorted(self.ar["a"].items()):
                lines.append(f"  a[{idx}] = {entry}")
        lines.append(paint(Fore.YELLOW, "=" * 78))
        lines.append("rationality")
        for name, row in sorted(self.rationality.items()):
            lines.append(f"  {name:<20} {row['verdict']:<12} support {row['support']}")
        lines.append(paint(Fore.YELLOW, "=" * 78))
        lines.append("claims")
        for record in sorted(self.verification.records, key=lambda r: r.claim_id):
            status = paint(_STATUS_COLOR.get(record.status, Fore.WHITE), f"{record.status:<15}")
            detail = f" {record.detail}" if record.detail else ""
            lines.append(f"  {record.claim_id:<38} {status}{detail}".rstrip())
        facts = self.verification.facts
        plain = {k: v for k, v in facts.items() if not k.startswith("support.")}
        if plain:
            lines.append("facts")
            for key in sorted(plain):
                lines.append(f"  {key} = {plain[key]}")
        if self.findings:
            lines.append(paint(Fore.YELLOW, "=" * 78))
            lines.append("findings")
            for finding in self.findings:
                lines.append(f"  - {finding}")
        if self.warnings:
            lines.append("warnings")
            for warning in self.warnings:
                lines.append(paint(Fore.RED, f"  ! {warning}"))
        if self.oracle is not None:
            lines.append(paint(Fore.YELLOW, "=" * 78))
            verdict = "passed" if self.oracle["passed"] else "FAILED"
            lines.append(
                f"oracle: {verdict}, {self.oracle['points']} points, "
                f"{self.oracle['precision']} digits, tolerance {self.oracle['tolerance']}, "
                f"{self.oracle['skipped']} skipped"
            )
            for name, error in sorted(self.oracle["max_relative_error"].items()):
                lines.append(f"  {name:<20} {error}")
        for name, entries in sorted(self.tensors.items()):
            lines.append(paint(Fore.YELLOW, "=" * 78))
            lines.append(f"{name}")
            for idx, entry in entries.items():
                lines.append(f"  [{idx}] {entry}")
        lines.append(paint(Fore.YELLOW, "*" * 78))
        lines.append(paint(Fore.GREEN if self.ok else Fore.RED, "OK" if self.ok else "CLAIMS FAIL"))
        return lines

    def to_text(self) -> str:
        "Deterministic plain text, no color codes."
        return "\n".join(self._lines(colored=False)) + "\n"

    def __str__(self):
        return self.to_text()

    def print(self, console=None):
        """
        Terminal output: rich tables when rich is installed, colorama otherwise.
        """
        if not RICH:
            print("\n".join(self._lines(colored=True)))
            return
        console = console or Console()
        m = self.metric
        console.rule(f"[cyan]{m['name']}[/cyan] ({m['family']}, n = {m['n']})")
        console.print(f"F^2 = {m['F2']}")
        if self.ar is None:
            console.print("AR: [yellow]no[/yellow]")
        else:
            console.print(f"AR: [green]yes[/green], eta = theta^{self.ar['theta_deg']}")
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Claim")
        table.add_column("Status")
        table.add_column("Detail")
        for record in sorted(self.verification.records, key=lambda r: r.claim_id):
            style = _RICH_STATUS.get(record.status, "yellow")
            table.add_row(record.claim_id, f"[{style}]{record.status}[/{style}]", record.detail)
        console.print(table)
        for finding in self.findings:
            console.print(f"[yellow]finding[/yellow] {finding}")
        for warning in self.warnings:
            console.print(f"[red]warning[/red] {warning}")
        if self.oracle is not None:
            oracle = Table(show_header=True, header_style="bold magenta")
            oracle.add_column("Object")
            oracle.add_column("Max relative error")
            for name, error in sorted(self.oracle["max_relative_error"].items()):
                oracle.add_row(name, error)
            console.print(oracle)
        console.print("[green]OK[/green]" if self.ok else "[bold red]CLAIMS FAIL[/bold red]")


@dataclass
class CatalogReport:
    "One AnalysisReport per catalog entry, in catalog order."

    reports: t.List[AnalysisReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def failures(self) -> t.List[str]:
        return [f"{r.metric['name']}: {f}" for r in self.reports for f in r.failures]

    def to_dict(self, include_timing: bool = False):
        return {
            "schema": SCHEMA_VERSION,
            "metrics": [r.to_dict(include_timing) for r in self.reports],
            "ok": self.ok,
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        return "".join(r.to_text() for r in self.reports)

    def print(self):
        for report in self.reports:
            report.print()
