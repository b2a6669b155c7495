import json

from dvsigma import pipeline
from dvsigma.cli import run
from dvsigma.pipeline import Cache, Options


def test_report_on_empty_cache(tmp_path, capsys):
    code = run(["report", "--cache", str(tmp_path / "c")])
    assert code == 2
    err = capsys.readouterr().err
    assert "missing stages" in err and "build-sigma" in err


def test_missing_prerequisite_names_the_stage(tmp_path, capsys):
    code = run(["picard", "--cache", str(tmp_path)])
    assert code == 2
    assert "build-sigma" in capsys.readouterr().err


def test_fixed_points_fragment_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["fixed-points", "--cache", str(tmp_path / "c1"), "--out", str(out1)]) == 0
    assert run(["fixed-points", "--cache", str(tmp_path / "c2"), "--out", str(out2)]) == 0
    a, b = json.loads(out1.read_text()), json.loads(out2.read_text())
    a.pop("timing"), b.pop("timing")
    assert a == b
    assert a["status"] == "pass" and a["outputs"]["count"] == 5
    assert all("anchor" in c for c in a["checks"])


def test_cache_env_variable(tmp_path, monkeypatch):
    monkeypatch.setenv(pipeline.CACHE_ENV, str(tmp_path / "env"))
    assert run(["fixed-points", "--out", str(tmp_path / "x.json")]) == 0
    assert any((tmp_path / "env").glob("fixed_points-*.json"))


def test_cache_key_depends_on_flags():
    assert Options(primes=(23,)).key() != Options(primes=(67,)).key()
    assert Options(budget=10).key() != Options(budget=11).key()
    assert Options(jobs=1).key() == Options(jobs=4).key()


def test_build_sigma_fragment(cache):
    from conftest import ensure

    block = ensure(cache, "build-sigma").block("build-sigma")
    assert len(block["outputs"]["triples"]) == 10
    assert block["outputs"]["invariant"] == {"P": True, "R": True, "a": True}


def test_singular_points_fragment(cache):
    from conftest import ensure

    block = ensure(cache, "singular-points").block("singular-points")
    names = {c["anchor"]: c for c in block["checks"]}
    assert names["count=55"]["value"] == 55
    assert names["distinct=true"]["ok"] and names["transitivity=true"]["ok"]


def test_report_renders_figures(cache, tmp_path):
    from conftest import ensure

    ensure(cache, "picard", "lattice")
    out = tmp_path / "cert.json"
    run(["report", "--cache", str(cache.root), "--out", str(out)])
    cert = json.loads(out.read_text())
    assert "picard_gram.png" in cert["figures"]
    assert (tmp_path / "figures" / "hperp_character.png").exists()
    again = pipeline.build_report(Cache(cache.root, Options()))[0]
    assert again["canonical_hash"] == cert["canonical_hash"]


def test_stretch_block_does_not_decide_verdict(tmp_path):
    cache = Cache(tmp_path, Options())
    for name, block in pipeline.STAGES.items():
        status = "fail" if block in pipeline.STRETCH else "pass"
        cache.store(name, {"stage": block, "status": status, "timing": {"seconds": 0.0}})
    cert, missing = pipeline.build_report(cache)
    assert missing == []
    assert cert["verdict"] == "pass"
    cache.store("picard", {"stage": "picard", "status": "fail", "timing": {"seconds": 0.0}})
    assert pipeline.build_report(cache)[0]["verdict"] == "fail"
