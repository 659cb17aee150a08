import json

import pytest

from classes import config
from classes.cache import Cache
from classes.errors import ManifestError
from classes.manifest import CLAIM_KINDS, Claim, ClaimManifest, check_claim, load_element, run_manifest


def write_manifest(path, claims):
    path.write_text(json.dumps({"claims": claims}))
    return path


def test_claim_validation():
    with pytest.raises(ManifestError):
        Claim.from_json({"name": "x", "kind": "volume", "expected": 1})
    with pytest.raises(ManifestError):
        Claim.from_json({"name": "x", "kind": "dimension", "expected": 1, "tier": "medium"})
    with pytest.raises(ManifestError):
        Claim.from_json({"name": "x", "kind": "dimension"})


def test_bad_manifest_file(tmp_path):
    with pytest.raises(ManifestError):
        ClaimManifest.load(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(ManifestError):
        ClaimManifest.load(broken)


def test_tier_selection(tmp_path):
    manifest = ClaimManifest.load(write_manifest(tmp_path / "claims.json", [
        {"name": "a", "kind": "dimension", "params": {"h": 1, "n": 3}, "expected": 1},
        {"name": "b", "kind": "dimension", "params": {"h": 2, "n": 3}, "expected": 3, "tier": "slow"},
    ]))
    assert [claim.name for claim in manifest.select("fast")] == ["a"]
    assert [claim.name for claim in manifest.select("all")] == ["a", "b"]
    assert run_manifest(ClaimManifest(), "fast", None) == []


def test_run_claims(tmp_path, cache):
    element = tmp_path / "spike.json"
    element.write_text(json.dumps({"h": 2, "n": 2, "terms": [[1, 1]]}))
    manifest = ClaimManifest.load(write_manifest(tmp_path / "claims.json", [
        {"name": "dim", "kind": "dimension", "params": {"h": 2, "n": 3}, "expected": 3},
        {"name": "zero part", "kind": "dimension", "params": {"h": 2, "n": 3, "part": "zero"}, "expected": 2},
        {"name": "kernel", "kind": "kernel-dim", "params": {"h": 2, "n": 4}, "expected": 0},
        {"name": "ann", "kind": "annihilation", "params": {"element": "spike.json"}, "expected": True},
        {"name": "psi", "kind": "psi-identity", "params": {"element": "spike.json", "cycle": "l1 l1"},
         "expected": True},
        {"name": "class", "kind": "transfer-class", "params": {"element": "spike.json"}, "expected": "nonzero"},
        {"name": "pair", "kind": "pairing",
         "params": {"element": {"h": 2, "n": 2, "terms": [[1, 1]]}, "polynomial": "(1,1)"}, "expected": 1},
        {"name": "wrong", "kind": "dimension", "params": {"h": 1, "n": 3}, "expected": 5},
        {"name": "missing file", "kind": "annihilation", "params": {"element": "nope.json"}, "expected": True},
    ]))
    results = run_manifest(manifest, "fast", cache)
    passed = {result.claim.name: result.passed for result in results}
    assert passed == {"dim": True, "zero part": True, "kernel": True, "ann": True, "psi": True, "class": True,
                      "pair": True, "wrong": False, "missing file": False}
    errors = {result.claim.name: result.error for result in results}
    assert errors["missing file"] is not None
    assert results[-2].to_json()["actual"] == 1


def test_load_element_inline(tmp_path):
    xi = load_element({"h": 3, "n": 3, "terms": [[0, 0, 3]]}, tmp_path)
    assert xi.degree == 3


def test_shipped_manifest_loads():
    manifest = ClaimManifest.load(config.DEFAULT_MANIFEST)
    assert manifest.select("fast")
    assert manifest.select("slow")
    assert {claim.kind for claim in manifest.claims} <= set(CLAIM_KINDS)
    assert all(claim.provenance.split(" ")[0] in ("[PAPER]", "[TRIVIAL]", "[DERIVED]") for claim in manifest.claims)


def test_shipped_manifest_covers_the_six_line():
    manifest = ClaimManifest.load(config.DEFAULT_MANIFEST)
    six_line = {claim.params["t"]: claim.expected for claim in manifest.claims
                if claim.kind == "ext-dim" and claim.params["s"] == 6}
    assert sorted(six_line) == list(range(13))
    assert [t for t, dim in six_line.items() if dim] == [0, 10, 11]


def test_single_claim_timing(cache, tmp_path):
    claim = Claim("q", "dimension", {"h": 1, "n": 2}, 0)
    result = check_claim(claim, cache, tmp_path)
    assert result.passed
    assert result.seconds >= 0


@pytest.mark.slow
def test_shipped_fast_tier_passes():
    results = run_manifest(ClaimManifest.load(config.DEFAULT_MANIFEST), "fast", Cache(None))
    failed = [result.to_json() for result in results if not result.passed]
    assert not failed
