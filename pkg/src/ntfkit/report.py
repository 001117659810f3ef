"""Run reports in two renderings: a human summary and stable JSON."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .decomposition import PrimeIdeal
from .ideal import MonomialIdeal
from .monomial import Monomial


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def jsonable(v):
    """Convert library values to plain JSON data (ideals and monomials become strings)."""
    if isinstance(v, PrimeIdeal):
        return [f"x{i}" for i in sorted(v.vars)]
    if isinstance(v, (MonomialIdeal, Monomial)):
        return str(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return [jsonable(x) for x in sorted(v, key=str)]
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return v


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)  # name -> digest
    result: object = None
    verdict: str | None = None
    witnesses: list = field(default_factory=list)
    timing_ms: float = 0.0
    seed: int | None = None
    text: str = ""  # human rendering of ``result``
    exit_code: int = 0

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": jsonable(self.result),
            "verdict": self.verdict,
            "witnesses": jsonable(self.witnesses),
            "timing_ms": round(self.timing_ms, 3),
            "seed": self.seed,
        }


def emit_report(r: RunReport, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(r.as_dict(), indent=2, ensure_ascii=False) + "\n"
    out = r.text
    if out and not out.endswith("\n"):
        out += "\n"
    if r.verdict is not None and "verdict:" not in out:
        out += f"verdict: {r.verdict}\n"
    return out


def format_prime_list(p: PrimeIdeal) -> str:
    return "[" + ",".join(f"x{i}" for i in sorted(p.vars)) + "]"


def suite_table(outcomes) -> str:
    rows = [("scenario", "status", "checks", "seconds", "title")]
    for o in outcomes:
        rows.append((o.label, o.status, str(o.checks), f"{o.seconds:.1f}", o.title))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = []
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r[:4], widths)) + "  " + r[4])
    for o in outcomes:
        for f in o.failures[:5]:
            lines.append(f"  {o.label} counterexample: " + json.dumps(f, ensure_ascii=False))
        if len(o.failures) > 5:
            lines.append(f"  {o.label}: {len(o.failures) - 5} further failures")
        if o.budget_error:
            lines.append(f"  {o.label} budget: {o.budget_error}")
    return "\n".join(lines) + "\n"
