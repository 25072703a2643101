"""Library-level behavior of the named self-check registry."""

import pytest

from dunkl_oscillator.errors import DomainError
from dunkl_oscillator.profiles import DeformationParams
from dunkl_oscillator.verify import SUITES, available_checks, run_checks


def test_available_checks_cover_all_suites():
    all_names = available_checks("all")
    assert len(all_names) == len(set(all_names))
    per_suite = [available_checks(s) for s in SUITES]
    assert all(names for names in per_suite)
    assert sorted(n for names in per_suite for n in names) == sorted(all_names)
    with pytest.raises(DomainError):
        available_checks("everything")


def test_full_default_run_is_green():
    results = run_checks(suite="all", max_workers=1)
    assert len(results) == len(available_checks("all"))
    assert [res.name for res in results] == sorted(res.name for res in results)
    bad = [(res.name, res.residual, res.error) for res in results if not res.passed]
    assert not bad, f"failing checks: {bad}"


def test_mu_accepts_tuple_and_dataclass_equally():
    as_tuple = run_checks(suite="radial", mu=(0.3, 1.2), max_workers=1)
    as_params = run_checks(suite="radial", mu=DeformationParams(0.3, 1.2), max_workers=1)
    assert [(r.name, r.residual, r.passed) for r in as_tuple] == [
        (r.name, r.residual, r.passed) for r in as_params
    ]
    assert all(r.passed for r in as_tuple)


def test_parallel_and_serial_runs_agree():
    serial = run_checks(suite="angular", max_workers=1)
    parallel = run_checks(suite="angular", max_workers=4)
    assert [(r.name, r.residual) for r in serial] == [(r.name, r.residual) for r in parallel]


def test_tolerance_override_behavior():
    results = run_checks(
        suite="radial", max_workers=1, tol_overrides={"radial_gram_identity": 1e-30}
    )
    by_name = {res.name: res for res in results}
    assert not by_name["radial_gram_identity"].passed
    assert by_name["radial_gram_identity"].tolerance == 1e-30
    with pytest.raises(DomainError):
        run_checks(suite="radial", tol_overrides={"no_such_check": 1.0})


def test_invalid_suite_and_workers_raise():
    with pytest.raises(DomainError):
        run_checks(suite="everything")
    with pytest.raises(DomainError):
        run_checks(suite="radial", max_workers=0)


def test_seed_changes_are_still_green():
    for seed in (0, 7):
        results = run_checks(suite="algebra", seed=seed, max_workers=1)
        assert all(res.passed for res in results)
