"""Structured pass/fail reports for the named verification suites."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    """One verified claim: stable id, human anchor, outcome, failure witness."""

    cid: str
    anchor: str
    ok: bool
    witness: str | None
    ms: float


@dataclass
class VerificationReport:
    suite: str
    seed: int | None = None
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def counts(self):
        p = sum(1 for e in self.entries if e.ok)
        return p, len(self.entries) - p

    def check(self, cid: str, anchor: str, fn, witness=None):
        """Run one check; fn returns truthiness (exceptions count as failures)."""
        t = time.perf_counter()
        wit = None
        try:
            ok = bool(fn())
            if not ok:
                wit = witness() if callable(witness) else witness
        except Exception as e:  # a crashed check is a failed check, with the reason
            ok = False
            wit = f"{type(e).__name__}: {e}"
        self.entries.append(CheckEntry(cid, anchor, ok,
                                       wit, (time.perf_counter() - t) * 1000.0))
        return ok

    def note(self, cid: str, anchor: str, text: str):
        """Informational entry that always passes (recorded observations)."""
        self.entries.append(CheckEntry(cid, anchor, True, text, 0.0))

    def extend(self, other: "VerificationReport"):
        self.entries.extend(other.entries)

    def sorted(self) -> "VerificationReport":
        out = VerificationReport(self.suite, self.seed)
        out.entries = sorted(self.entries, key=lambda e: e.cid)
        return out

    def to_json(self) -> str:
        p, f = self.counts
        doc = {
            "suite": self.suite,
            "entries": [
                {
                    "id": e.cid,
                    "anchor": e.anchor,
                    "status": "pass" if e.ok else "fail",
                    **({"witness": e.witness} if e.witness is not None else {}),
                    "ms": round(e.ms, 3),
                }
                for e in self.entries
            ],
            "summary": {"pass": p, "fail": f},
        }
        if self.seed is not None:
            doc["seed"] = self.seed
        return json.dumps(doc, indent=2)

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            status = "PASS" if e.ok else "FAIL"
            line = f"{status}  {e.cid}  [{e.anchor}]  ({e.ms:.1f} ms)"
            if e.witness is not None:
                line += f"\n      {e.witness}"
            lines.append(line)
        p, f = self.counts
        tail = f"{self.suite}: {p} passed, {f} failed"
        if self.seed is not None:
            tail += f" (seed {self.seed})"
        lines.append(tail)
        return "\n".join(lines)
