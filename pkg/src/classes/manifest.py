from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from timeit import default_timer as timer
from typing import Any, Callable, Dict, List, Optional

from progress.bar import ChargingBar
from termcolor import colored

from classes.cache import Cache
from classes.dual import DualElement, is_annihilated, pairing
from classes.errors import HitTransferError, ManifestError
from classes.ext_group import ext_dimension
from classes.induced_endo import invariants, invariants_weight
from classes.kameko import kameko_kernel
from classes.lambda_algebra import LambdaElement, adem_normalize, differential
from classes.monomial import WeightVector
from classes.polynomial import Polynomial
from classes.transfer import coinvariants, psi, transfer_image

logger = logging.getLogger(__name__)

TIERS = ("fast", "slow")


@dataclass
class Claim:
    """
    One checkable statement: an operation, its parameters and the value it must return

    :param name: a short identifier shown in the report
    :param kind: the claim kind, one of CLAIM_KINDS
    :param params: the parameters of the operation
    :param expected: the expected value
    :param provenance: where the expected value comes from
    :param tier: "fast" or "slow"
    """
    name: str
    kind: str
    params: Dict[str, Any]
    expected: Any
    provenance: str = ""
    tier: str = "fast"

    @classmethod
    def from_json(cls, payload: dict) -> Claim:
        try:
            claim = cls(payload["name"], payload["kind"], dict(payload.get("params", {})), payload["expected"],
                        payload.get("provenance", ""), payload.get("tier", "fast"))
        except KeyError as e:
            raise ManifestError("Claim {} is missing the field {}".format(payload.get("name", "?"), e)) from e
        if claim.kind not in CLAIM_KINDS:
            raise ManifestError("Claim {} has unknown kind {}".format(claim.name, claim.kind))
        if claim.tier not in TIERS:
            raise ManifestError("Claim {} has unknown tier {}".format(claim.name, claim.tier))
        return claim


@dataclass
class ClaimManifest:
    """
    A list of claims read from a JSON file {"claims": [...]}; element files are resolved against the manifest's
    directory
    """
    claims: List[Claim] = field(default_factory=list)
    root: Path = Path(".")

    @classmethod
    def load(cls, path) -> ClaimManifest:
        path = Path(path)
        try:
            payload = json.loads(path.read_text())
        except (OSError, ValueError) as e:
            raise ManifestError("Cannot read manifest {}: {}".format(path, e)) from e
        if not isinstance(payload, dict) or not isinstance(payload.get("claims", []), list):
            raise ManifestError("Manifest {} must be an object with a list of claims".format(path))
        return cls([Claim.from_json(claim) for claim in payload.get("claims", [])], path.parent)

    def select(self, tier: str) -> List[Claim]:
        if tier == "all":
            return list(self.claims)
        return [claim for claim in self.claims if claim.tier == tier]


@dataclass
class ClaimResult:
    claim: Claim
    actual: Any
    passed: bool
    seconds: float
    error: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "name": self.claim.name,
            "kind": self.claim.kind,
            "expected": self.claim.expected,
            "actual": self.actual,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "error": self.error,
        }


def load_element(reference, root: Path) -> DualElement:
    """
    An element given inline as {"h", "n", "terms"} or as a path to such a file, relative to the manifest
    """
    if isinstance(reference, dict):
        return DualElement.from_json(reference)
    path = Path(root) / reference
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError) as e:
        raise ManifestError("Cannot read element file {}: {}".format(path, e)) from e
    return DualElement.from_json(payload)


def _part(total, zero, part: str):
    return {"total": total, "zero": zero, "positive": total - zero}[part]


def _dimension(params, cache: Cache, root: Path):
    cb = cache.basis_of(params["h"], params["n"])
    return _part(cb.dim, cb.dim_zero, params.get("part", "total"))


def _weight_dimension(params, cache: Cache, root: Path):
    cb = cache.basis_of(params["h"], params["n"])
    component = cb.weight_component(WeightVector.parse(params["weight"]))
    return _part(component.dim_total, component.dim_zero, params.get("part", "total"))


def _kernel_dimension(params, cache: Cache, root: Path):
    pair = kameko_kernel(params["h"], params["n"], cache.basis_of)
    return _part(pair.kernel_dim, pair.kernel_dim_zero, params.get("part", "total"))


def _invariant_dimension(params, cache: Cache, root: Path):
    cb = cache.basis_of(params["h"], params["n"])
    group = params.get("group", "GL")
    if "weight" in params:
        return invariants_weight(cb, WeightVector.parse(params["weight"]), group).dim
    return invariants(cb, group).dim


def _coinvariant_dimension(params, cache: Cache, root: Path):
    return coinvariants(params["h"], params["n"], cache.basis_of, capacity=cache.capacity, force=cache.force).dim


def _ext_dimension(params, cache: Cache, root: Path):
    return ext_dimension(params["s"], params["t"], capacity=cache.capacity, force=cache.force)


def _psi_identity(params, cache: Cache, root: Path):
    # True when psi(xi) equals the cycle part plus the boundaries of the listed elements
    expected = adem_normalize(LambdaElement.parse(params["cycle"]))
    for text in params.get("boundary_of", []):
        expected = expected + differential(LambdaElement.parse(text))
    return psi(load_element(params["element"], root)) == expected


def _annihilation(params, cache: Cache, root: Path):
    return is_annihilated(load_element(params["element"], root))


def _pairing(params, cache: Cache, root: Path):
    xi = load_element(params["element"], root)
    return pairing(Polynomial.parse(params["polynomial"], xi.h), xi)


def _transfer_class(params, cache: Cache, root: Path):
    image = transfer_image(load_element(params["element"], root), capacity=cache.capacity, force=cache.force)
    return image.cycle_class.to_json()["class"]


CLAIM_KINDS: Dict[str, Callable] = {
    "dimension": _dimension,
    "weight-dimension": _weight_dimension,
    "kernel-dim": _kernel_dimension,
    "invariant-dim": _invariant_dimension,
    "coinvariant-dim": _coinvariant_dimension,
    "ext-dim": _ext_dimension,
    "psi-identity": _psi_identity,
    "annihilation": _annihilation,
    "pairing": _pairing,
    "transfer-class": _transfer_class,
}


def check_claim(claim: Claim, cache: Cache, root: Path) -> ClaimResult:
    start = timer()
    try:
        actual = CLAIM_KINDS[claim.kind](claim.params, cache, root)
        error = None
    except HitTransferError as e:
        actual, error = None, str(e)
    seconds = timer() - start
    logger.debug("Claim %s: %s in %.2fs", claim.name, actual, seconds)
    return ClaimResult(claim, actual, error is None and actual == claim.expected, seconds, error)


def run_manifest(manifest: ClaimManifest, tier: str, cache: Cache, verbose: bool = False) -> List[ClaimResult]:
    """
    Checks every claim of a tier

    :param manifest: the claim manifest
    :param tier: "fast", "slow" or "all"
    :param cache: the hit-space cache the claims share
    :param verbose: bool, show a progress bar
    :return: one ClaimResult per selected claim, in manifest order
    """
    claims = manifest.select(tier)
    results = []
    if not claims:
        return results
    if not verbose:
        return [check_claim(claim, cache, manifest.root) for claim in claims]
    with ChargingBar('Claims:', max=len(claims), suffix='%(percent)d%%') as bar:
        for claim in claims:
            results.append(check_claim(claim, cache, manifest.root))
            bar.next()
    return results


def print_report(results: List[ClaimResult]):
    print("{:<36} {:<18} {:>10} {:>10} {:>8}  {}".format("Claim", "Kind", "Expected", "Actual", "Seconds",
                                                          "Result"))
    for result in results:
        verdict = colored("PASS", "green") if result.passed else colored("FAIL", "red")
        actual = result.actual if result.error is None else "error"
        print("{:<36} {:<18} {:>10} {:>10} {:>8.2f}  {}".format(result.claim.name, result.claim.kind,
                                                                 str(result.claim.expected), str(actual),
                                                                 result.seconds, verdict))
        if result.error is not None:
            print("    {}".format(result.error))
    failures = sum(1 for result in results if not result.passed)
    print("{} claims, {} passed, {} failed".format(len(results), len(results) - failures, failures))
