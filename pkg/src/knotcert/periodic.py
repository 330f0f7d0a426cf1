"""
Explicitly equivariant periodic knots and the quotient-definiteness check.

The p-fold connected sum of a knot K with itself, arranged symmetrically
around an axis, is p-periodic with quotient K.  Its boundary-connected
Seifert surface is preserved by the rotation and the rotation permutes
the p copies of K's surface, so its Seifert matrix is the block sum of p
copies of K's matrix.
"""

from dataclasses import dataclass, field
from typing import List

from .errors import BadPeriod
from .exactalg import direct_sum
from .invariants import (DefinitenessCertificate, SeifertMatrix, Verdict, alexander,
                         certify_definite, signature, validate)


@dataclass(frozen=True)
class PeriodicModel:
    period: int
    quotient: SeifertMatrix
    cover: SeifertMatrix
    name: str = ""


def make_periodic_model(v, p: int, name: str = "") -> PeriodicModel:
    if p < 2:
        raise BadPeriod(f"period must be >= 2, got {p}")
    q = validate(v, name)
    cover = validate(direct_sum([q.v] * p), name=f"#{p} {name}".strip())
    return PeriodicModel(p, q, cover, name or q.name)


@dataclass
class TheoremReport:
    name: str
    period: int
    quotient: DefinitenessCertificate
    cover: DefinitenessCertificate
    checks: dict = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"name": self.name, "period": self.period,
                "quotient": self.quotient.to_dict(), "cover": self.cover.to_dict(),
                "checks": dict(self.checks), "passed": self.passed}


def check_theorem(m: PeriodicModel) -> TheoremReport:
    """Check the relations a p-periodic cover must satisfy against its quotient.

    Besides sigma, Delta and width scaling, the verdicts must agree; in
    particular a definite cover forces a definite quotient of the same sign.
    """
    p = m.period
    qc = certify_definite(m.quotient)
    cc = certify_definite(m.cover)
    dq, dc = alexander(m.quotient), alexander(m.cover)
    checks = {
        "sigma_scaling": signature(m.cover) == p * signature(m.quotient),
        "alexander_power": dc == dq ** p,
        "width_scaling": dc.width == p * dq.width,
        "verdict_equality": cc.verdict == qc.verdict
        and (cc.verdict != Verdict.DEFINITE or cc.sign == qc.sign),
    }
    failures = [k for k, ok in checks.items() if not ok]
    return TheoremReport(m.name, p, qc, cc, checks, failures)
