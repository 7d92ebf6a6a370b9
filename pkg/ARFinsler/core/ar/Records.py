#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Records.py - claim records, formula checks and the verification report
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass, field

# --- this application's modules ---
from ..metrics.Printed import FamilyVerdict

# ------------------------------------------------------------------------------

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"
STATUSES = (HOLDS, FAILS, NOT_APPLICABLE)


@dataclass
class ClaimRecord:
    claim_id: str
    status: str
    detail: str = ""
    witness: t.Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_dict(self):
        return {
            "claim": self.claim_id,
            "status": self.status,
            "detail": self.detail,
            "witness": self.witness,
        }


@dataclass
class FormulaCheck:
    """
    A printed formula split in term families, each compared with its
    derivation. ``holds`` is the verdict on the printed formula as a whole.
    """

    claim_id: str
    holds: bool
    families: t.List[FamilyVerdict] = field(default_factory=list)
    note: str = ""

    @property
    def findings(self) -> t.List[str]:
        out = []
        for fam in self.families:
            if not fam.holds:
                factor = f" (derived/printed = {fam.factor})" if fam.factor else ""
                out.append(f"{self.claim_id}: term family '{fam.name}' differs{factor}")
        if not self.holds and not out:
            out.append(f"{self.claim_id}: printed formula differs" + (f" ({self.note})" if self.note else ""))
        return out

    def to_dict(self):
        return {
            "claim": self.claim_id,
            "holds": self.holds,
            "families": [f.to_dict() for f in self.families],
            "note": self.note,
            "findings": self.findings,
        }


class VerificationReport(object):
    """
    Records keyed by claim id (each id at most once) plus the list of
    printed-formula findings, which never count as failures.
    """

    def __init__(self):
        self._records: t.Dict[str, ClaimRecord] = {}
        self.findings: t.List[str] = []
        self.facts: t.Dict[str, t.Any] = {}

    def add(self, claim_id, status, detail="", witness=None) -> ClaimRecord:
        if claim_id in self._records:
            raise ValueError(f"claim {claim_id} recorded twice")
        record = ClaimRecord(claim_id, status, detail, witness)
        self._records[claim_id] = record
        return record

    def add_bool(self, claim_id, value: bool, detail="", witness=None) -> ClaimRecord:
        return self.add(claim_id, HOLDS if value else FAILS, detail, witness)

    def add_check(self, check: FormulaCheck):
        """
        A formula check whose derivation agreed with the pipeline; printed
        differences become findings.
        """
        self.add(check.claim_id, HOLDS, check.note or ("as printed" if check.holds else "corrected form"))
        self.findings.extend(check.findings)

    def merge(self, other: "VerificationReport"):
        for record in other.records:
            self.add(record.claim_id, record.status, record.detail, record.witness)
        self.findings.extend(other.findings)
        self.facts.update(other.facts)
        return self

    def complete(self, registry: t.Iterable[str], detail="not applicable to this metric"):
        "Record every registry claim not yet seen as not-applicable."
        for claim_id in registry:
            if claim_id not in self._records:
                self.add(claim_id, NOT_APPLICABLE, detail)
        return self

    def __getitem__(self, claim_id) -> ClaimRecord:
        return self._records[claim_id]

    def __contains__(self, claim_id):
        return claim_id in self._records

    @property
    def records(self) -> t.List[ClaimRecord]:
        return list(self._records.values())

    @property
    def failures(self) -> t.List[ClaimRecord]:
        return [r for r in self._records.values() if r.status == FAILS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "records": [r.to_dict() for r in sorted(self._records.values(), key=lambda r: r.claim_id)],
            "findings": list(self.findings),
            "facts": {k: self.facts[k] for k in sorted(self.facts)},
        }
