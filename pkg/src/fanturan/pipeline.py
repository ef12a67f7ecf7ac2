"""End-to-end check of the star-cover construction."""

from __future__ import annotations

import platform
import time
from dataclasses import dataclass, field

from . import __version__
from .decompose import counting_audit_3, counting_audit_general
from .embed import contains_expansion
from .gallery import FamilySpec, star_cover, star_cover_count, t_fan


@dataclass
class VerificationReport:
    construction: FamilySpec
    count_claim: dict
    freeness: dict
    audits: list[dict] = field(default_factory=list)
    environment: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (
            self.count_claim["holds"]
            and self.freeness["status"] in ("FREE", "trivial", "skipped")
            and all(a["ok"] for a in self.audits)
        )

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "construction": str(self.construction),
            "count_claim": self.count_claim,
            "freeness": self.freeness,
            "audits": self.audits,
            "environment": self.environment,
            "holds": self.holds,
        }


class PipelineFailure(RuntimeError):
    def __init__(self, report: VerificationReport):
        self.report = report
        super().__init__(f"construction check failed: {report.freeness}")


def run_pipeline(n: int, t: int, r: int = 3, seed: int = 0, raise_on_failure: bool = False) -> VerificationReport:
    """Build the star cover, compare its size with the closed form, search it
    for the expanded fan (``r = 3``) and run the counting audits."""
    start = time.monotonic()
    spec = FamilySpec.make("star-cover", n=n, t=t, r=r)
    h = star_cover(n, t, r)
    expected = star_cover_count(n, t, r)
    count_claim = {"expected": expected, "enumerated": len(h), "holds": expected == len(h)}

    if t == 0:
        freeness = {"status": "trivial", "forbidden": None, "embedding": None}
    elif r == 3:
        emb = contains_expansion(h, t_fan(t))
        freeness = {
            "status": "FREE" if emb is None else "CONTAINS",
            "forbidden": f"fan t={t} r=3",
            "embedding": None if emb is None else emb.to_dict(),
        }
    else:
        freeness = {"status": "skipped", "forbidden": f"hyperfan t={t} r={r}", "embedding": None}

    audit_t = max(t, 1)
    audits = []
    if r == 3:
        audits.append({"kind": "r=3", **counting_audit_3(h, audit_t).to_dict()})
    if r >= 3:
        audits.append({"kind": "general", **counting_audit_general(h, audit_t).to_dict()})

    env = {
        "version": __version__,
        "python": platform.python_version(),
        "seed": seed,
        "elapsed": round(time.monotonic() - start, 6),
    }
    report = VerificationReport(spec, count_claim, freeness, audits, env)
    if raise_on_failure and freeness["status"] == "CONTAINS":
        raise PipelineFailure(report)
    return report


def replay(report: dict) -> VerificationReport:
    """Re-run a report from its recorded construction and seed."""
    spec = FamilySpec.parse(report["construction"])
    return run_pipeline(int(spec.get("n")), int(spec.get("t")), spec.r, seed=int(report["environment"].get("seed", 0)))
