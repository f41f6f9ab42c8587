import pytest

from capelli.sweeps import (
    CaseResult,
    SweepConfig,
    capelli_cases,
    default_jobs,
    fusion_cases,
    pole_cases,
    pole_table,
    run_case,
    run_suite,
    summarize_dimension_table,
)


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(max_n=0)


def test_case_lists_cover_acceptance_ranges():
    cfg = SweepConfig()
    shapes = {c[1][0] for c in fusion_cases(cfg) if c[0] == "fusion_limit"}
    assert len(shapes) == 18
    pairs = pole_cases(cfg)
    assert len(pairs) == 12 * 12  # including the empty diagram
    assert pairs[0][1] == ((), ())
    caps = [c for c in capelli_cases(cfg) if c[0] == "capelli_identity"]
    assert (((1, 1), 2, 2)) in [c[1] for c in caps]
    assert any(sum(c[1][0]) == 4 for c in caps)


def test_crash_becomes_failed_case():
    res = run_case(("vanishing", ((1,), (1,), 2)))
    assert not res.ok and "ValueError" in res.detail


def test_describe():
    r = CaseResult("pole_bound", {"lam": (2, 1), "mu": (1,)}, False, "pole order 2, bound 1")
    assert r.describe() == "pole_bound(lam=(2,1), mu=(1)): pole order 2, bound 1"


def test_parallel_matches_serial():
    serial = run_suite("rtt", SweepConfig(max_N=2, jobs=1))
    parallel = run_suite("rtt", SweepConfig(max_N=2, jobs=2))
    assert [(r.check, r.params, r.ok) for r in serial.results] == [(r.check, r.params, r.ok) for r in parallel.results]
    assert serial.ok


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("CAPELLI_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.setenv("CAPELLI_JOBS", "many")
    assert default_jobs() == 1


def test_tables():
    from math import factorial

    assert summarize_dimension_table(5) == {n: factorial(n) for n in range(1, 6)}
    rows = pole_table(2, 2)
    assert {"lambda": [1], "mu": [1], "pole_order": 1, "rank": 1, "contained": True} in rows
