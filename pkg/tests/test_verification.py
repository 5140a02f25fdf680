from cantor_oscillator.models.verification import SuiteResult
from cantor_oscillator.services.verification_service import VerificationService


def test_suite_result_records_failures():
    suite = SuiteResult(name="demo")
    assert suite.check("holds", True)
    assert not suite.check("broken", False)
    assert suite.checks == 2
    assert suite.failures == ["broken"]
    assert not suite.passed


def test_run_all_passes():
    summary = VerificationService.run_all(4)
    assert summary.passed
    assert all(suite.passed and suite.checks > 0 for suite in summary.suites.values())


def test_run_all_reports_findings():
    summary = VerificationService.run_all(4)
    topics = {finding.topic for finding in summary.findings}
    assert {"cauchy_bound", "orientation", "slope", "height", "witness_length"} <= topics
    cauchy = next(finding for finding in summary.findings if finding.topic == "cauchy_bound")
    assert (cauchy.stated, cauchy.computed) == ("41/27", "31/18")


def test_geometry_suite_alone():
    suite = VerificationService.cantor_geometry_suite(6)
    assert suite.passed, suite.failures
