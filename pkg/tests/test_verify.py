import json

import pytest

from schubgysin import verify as V


def test_sweep_table_is_well_formed():
    names = [s.identity for s in V.SWEEPS]
    assert len(names) == len(set(names))
    assert set(V.SUITES) == {"partitions", "tableaux", "polyring", "chow", "gysin", "duality", "jlp", "laplace", "giambelli"}
    assert V.select("all") == list(V.SWEEPS)
    assert all(s.quick for s in V.select("quick"))
    assert [s.identity for s in V.select("jlp")] == ["jlp", "jlp_direct"]
    assert [s.identity for s in V.select("complement_table")] == ["complement_table"]
    with pytest.raises(KeyError):
        V.select("nonsense")


def test_instances_are_json_and_reproducible():
    import random

    for sweep in V.SWEEPS:
        a = sweep.instances(random.Random("s"))
        b = sweep.instances(random.Random("s"))
        assert a == b and a
        json.dumps(a)


def test_report_is_deterministic():
    first = V.run("duality", seed=3).dumps()
    second = V.run("duality", seed=3).dumps()
    assert first == second
    other = V.run("duality", seed=4).dumps()
    assert json.loads(other)["summary"] == json.loads(first)["summary"]


def test_parallel_run_matches_serial():
    serial = V.run("giambelli", seed=1)
    parallel = V.run("giambelli", seed=1, jobs=2)
    assert serial.dumps() == parallel.dumps()
    assert serial.passed


def test_exceptions_become_failures(monkeypatch):
    def boom(inst):
        raise RuntimeError("nope")

    bad = V.Sweep("complement_table", "laplace", V.SWEEPS[0].instances, boom)
    monkeypatch.setattr(V, "SWEEPS", tuple(bad if s.identity == "complement_table" else s for s in V.SWEEPS))
    report = V.run("complement_table")
    assert not report.passed
    assert report.results[0]["witness"] == "RuntimeError: nope"
    assert report.summary()["complement_table"]["fail"] == len(report.results)


def test_report_shape():
    report = V.run("complement_table", seed=0)
    obj = report.to_json()
    assert set(obj) == {"seed", "suite", "summary", "passed", "results"}
    row = obj["results"][0]
    assert set(row) == {"identity", "suite", "instance", "pass", "witness"}
    assert row["pass"] is True and row["witness"] is None


def test_syt_count():
    assert V._syt_count((2, 2)) == 2
    assert V._syt_count((3, 3)) == 5
    assert V._syt_count(()) == 1


@pytest.mark.parametrize("suite", ["partitions", "polyring", "chow", "gysin", "duality", "jlp"])
def test_quick_suites_pass(suite):
    report = V.run(suite)
    assert report.passed, [r for r in report.results if not r["pass"]][:3]
