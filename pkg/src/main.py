import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from classes import config, utils
from classes.cache import Cache
from classes.dual import DualElement, annihilated_space, is_annihilated
from classes.errors import HitTransferError
from classes.ext_group import ext_group
from classes.induced_endo import invariants, invariants_weight
from classes.kameko import kameko_iterate, kameko_kernel
from classes.manifest import ClaimManifest, print_report, run_manifest
from classes.monomial import WeightVector
from classes.transfer import coinvariants, transfer_image

logger = logging.getLogger("hit_transfer")


def dimension_table(cache: Cache, h: int, degrees: List[int]) -> dict:
    """
    dim QP_n in h variables for each degree, as {"h", "degrees", "dims"}
    """
    return {"h": h, "degrees": degrees, "dims": [cache.basis_of(h, n).dim for n in degrees]}


def to_csv(payload: dict) -> str:
    """
    A two-line CSV of the scalar fields of a payload; a dimension table becomes a degree row over a dimension row
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if "degrees" in payload and "dims" in payload:
        writer.writerow(["n"] + payload["degrees"])
        writer.writerow(["dim"] + payload["dims"])
    else:
        keys = sorted(key for key, value in payload.items() if not isinstance(value, (list, dict)))
        writer.writerow(keys)
        writer.writerow([payload[key] for key in keys])
    return buffer.getvalue()


def emit(payload: dict, output_format: str):
    if output_format == "csv":
        sys.stdout.write(to_csv(payload))
    else:
        print(utils.dumps(payload))


def _read_element(path) -> DualElement:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise HitTransferError("Cannot read element file {}: {}".format(path, e)) from e
    return DualElement.from_json(payload)


def cmd_cohit(args, cache: Cache) -> dict:
    cb = cache.basis_of(args.h, args.n)
    if args.weight is None:
        payload = cb.to_json()
        payload.update({"dim_zero": cb.dim_zero, "dim_positive": cb.dim_positive})
        return payload
    component = cb.weight_component(WeightVector.parse(args.weight))
    return {
        "h": args.h,
        "n": args.n,
        "weight": str(component.weight),
        "dim": component.dim_total,
        "dim_zero": component.dim_zero,
        "dim_positive": component.dim_positive,
        "admissibles": [list(cb.admissibles[i]) for i in component.basis],
    }


def cmd_invariants(args, cache: Cache) -> dict:
    cb = cache.basis_of(args.h, args.n)
    group = args.group.upper()
    if args.weight is None:
        space = invariants(cb, group)
    else:
        space = invariants_weight(cb, WeightVector.parse(args.weight), group)
    payload = {"h": args.h, "n": args.n, "group": group, "dim": space.dim,
               "basis": [str(cb.lift(vector)) for vector in space.embedded(cb.dim)]}
    if args.weight is not None:
        payload["weight"] = args.weight
    return payload


def cmd_kameko(args, cache: Cache) -> dict:
    if args.times is not None:
        matrix = kameko_iterate(args.h, args.n, args.times, cache.basis_of)
        return {"h": args.h, "n": args.n, "times": args.times, "rows": int(matrix.shape[0]),
                "columns": int(matrix.shape[1]), "matrix": matrix.tolist()}
    pair = kameko_kernel(args.h, args.n, cache.basis_of)
    payload = pair.to_json()
    if not args.kernel:
        payload.pop("kernel")
    return payload


def cmd_ext(args, cache: Cache) -> dict:
    return ext_group(args.s, args.t, capacity=cache.capacity, force=cache.force, verbose=cache.verbose).to_json()


def cmd_annihilated(args, cache: Cache) -> dict:
    if args.element is not None:
        xi = _read_element(args.element)
        return {"h": xi.h, "n": xi.degree, "element": str(xi), "annihilated": is_annihilated(xi)}
    if args.h is None or args.n is None:
        raise HitTransferError("annihilated needs --h and --n, or --element")
    if args.coinvariants:
        return coinvariants(args.h, args.n, cache.basis_of, capacity=cache.capacity, force=cache.force).to_json()
    space = annihilated_space(args.h, args.n, capacity=cache.capacity, force=cache.force, verbose=cache.verbose)
    return {"h": args.h, "n": args.n, "dim": space.dim, "basis": [str(xi) for xi in space.basis]}


def cmd_transfer(args, cache: Cache) -> dict:
    xi = _read_element(args.element)
    for flag, actual in (("h", xi.h), ("n", xi.degree)):
        expected = getattr(args, flag)
        if expected is not None and expected != actual:
            raise HitTransferError("--{} {} does not match the element file ({})".format(flag, expected, actual))
    payload = transfer_image(xi, capacity=cache.capacity, force=cache.force).to_json()
    payload.update({"h": xi.h, "n": xi.degree})
    return payload


def cmd_table(args, cache: Cache) -> dict:
    return dimension_table(cache, args.h, utils.parse_range(args.degrees))


def cmd_reproduce(args, cache: Cache) -> int:
    manifest = ClaimManifest.load(args.manifest)
    results = run_manifest(manifest, args.tier, cache, verbose=args.verbose)
    if args.json_report:
        print(utils.dumps({"tier": args.tier, "results": [result.to_json() for result in results]}))
    else:
        print_report(results)
    return 0 if all(result.passed for result in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", type=str, default=None, help="Cache directory (default: $HIT_TRANSFER_CACHE_DIR "
                                                                    "or ~/.cache/hit-transfer).")
    common.add_argument("--no-cache", action="store_true", help="Do not read or write the cache.")
    common.add_argument("--force", action="store_true", help="Run computations above the capacity threshold.")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="Output format.")
    common.add_argument("--verbose", action="store_true", help="Debug logging and progress bars on stderr.")

    parser = argparse.ArgumentParser(description="Hit problem, Kameko maps, lambda algebra and the algebraic "
                                                 "transfer over GF(2)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    cohit = subparsers.add_parser("cohit", parents=[common], help="Admissible basis of QP_n in h variables.")
    cohit.add_argument("--h", type=int, required=True)
    cohit.add_argument("--n", type=int, required=True)
    cohit.add_argument("--weight", type=str, default=None, help="Weight vector, e.g. 2,3.")
    cohit.set_defaults(handler=cmd_cohit)

    invariant = subparsers.add_parser("invariants", parents=[common], help="S_h or GL_h invariants of QP_n.")
    invariant.add_argument("--h", type=int, required=True)
    invariant.add_argument("--n", type=int, required=True)
    invariant.add_argument("--group", choices=("s", "gl", "S", "GL"), default="gl")
    invariant.add_argument("--weight", type=str, default=None)
    invariant.set_defaults(handler=cmd_invariants)

    kameko = subparsers.add_parser("kameko", parents=[common], help="Kameko's map QP_n -> QP_{(n-h)/2}.")
    kameko.add_argument("--h", type=int, required=True)
    kameko.add_argument("--n", type=int, required=True)
    kameko.add_argument("--kernel", action="store_true", help="Include the kernel vectors.")
    kameko.add_argument("--times", type=int, default=None, help="Emit the matrix of the iterated map.")
    kameko.set_defaults(handler=cmd_kameko)

    ext = subparsers.add_parser("ext", parents=[common], help="Ext^{s, s+t} from the lambda algebra.")
    ext.add_argument("--s", type=int, required=True)
    ext.add_argument("--t", type=int, required=True)
    ext.set_defaults(handler=cmd_ext)

    annihilated = subparsers.add_parser("annihilated", parents=[common], help="Annihilated dual classes.")
    annihilated.add_argument("--h", type=int, default=None)
    annihilated.add_argument("--n", type=int, default=None)
    annihilated.add_argument("--element", type=str, default=None, help="Check an element file instead.")
    annihilated.add_argument("--coinvariants", action="store_true", help="Emit the GL_h coinvariants.")
    annihilated.set_defaults(handler=cmd_annihilated)

    transfer = subparsers.add_parser("transfer", parents=[common], help="Classify the transfer image of an element.")
    transfer.add_argument("--element", type=str, required=True)
    transfer.add_argument("--h", type=int, default=None)
    transfer.add_argument("--n", type=int, default=None)
    transfer.set_defaults(handler=cmd_transfer)

    reproduce = subparsers.add_parser("reproduce", parents=[common], help="Check a claim manifest.")
    reproduce.add_argument("--manifest", type=str, default=str(config.DEFAULT_MANIFEST))
    reproduce.add_argument("--tier", choices=("fast", "slow", "all"), default="fast")
    reproduce.add_argument("--json-report", action="store_true", help="Print the results as JSON.")
    reproduce.set_defaults(handler=cmd_reproduce)

    table = subparsers.add_parser("table", parents=[common], help="dim QP_n for a range of degrees.")
    table.add_argument("--h", type=int, required=True)
    table.add_argument("--degrees", type=str, required=True, help="e.g. 1-13")
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    logger.debug("Running %s", args.command)
    settings = config.Settings.from_arguments(args.cache_dir, args.force, args.no_cache)
    cache = Cache.from_settings(settings, verbose=args.verbose)
    try:
        result = args.handler(args, cache)
    except HitTransferError as e:
        print("error: {}".format(e), file=sys.stderr)
        return 2
    if isinstance(result, int):
        return result
    emit(result, args.format)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
