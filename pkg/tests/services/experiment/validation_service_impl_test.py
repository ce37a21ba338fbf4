import pytest

from plpf.error_handler.exceptions import DomainException


def test_groups(validation_service):
    assert validation_service.groups()[0] == "connectivity"
    assert "determinism" in validation_service.groups()


@pytest.mark.parametrize("group", ["capacity", "reachability", "localization", "determinism"])
def test_deterministic_groups_pass(validation_service, group):
    report = validation_service.run(seed=1, trials=100, n_jobs=1, progress=False, groups=(group,))
    assert report.checks
    assert all(check.name.startswith(f"{group}.") for check in report.checks)
    assert report.passed, report.failures


def test_run_rejects_bad_arguments(validation_service):
    with pytest.raises(DomainException):
        validation_service.run(seed=1, trials=100, groups=("astrology",))
    with pytest.raises(DomainException):
        validation_service.run(seed=1, trials=10)
    with pytest.raises(DomainException):
        validation_service.run(seed=-1, trials=100)


@pytest.mark.slow
def test_full_validation_passes(validation_service):
    report = validation_service.run(seed=20240601, trials=2000, progress=False)
    assert report.passed, report.failures
