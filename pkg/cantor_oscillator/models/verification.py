from pydantic import BaseModel, Field
from typing import Dict, List

from cantor_oscillator.models.oscillator import Finding


class SuiteResult(BaseModel):
    name: str
    checks: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, label: str, condition: bool) -> bool:
        self.checks += 1
        if not condition:
            self.failures.append(label)
        return condition


class SuiteSummary(BaseModel):
    passed: bool
    checks: int
    failures: List[str]


class VerificationSummary(BaseModel):
    max_level: int
    passed: bool
    suites: Dict[str, SuiteSummary]
    findings: List[Finding]
