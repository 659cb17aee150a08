import os
from dataclasses import dataclass
from pathlib import Path

# Monomial count above which a computation refuses to start without force
CAPACITY_THRESHOLD = int(os.environ.get("HIT_TRANSFER_CAPACITY", 200000))
# Cache directory, overridable from the environment and then from the command line
CACHE_DIR = Path(os.environ.get("HIT_TRANSFER_CACHE_DIR", Path.home() / ".cache" / "hit-transfer"))
# Bumping the schema version invalidates every cache entry
SCHEMA_VERSION = 1
# The claim manifest shipped with the repository
DEFAULT_MANIFEST = Path(__file__).resolve().parent.parent / "manifests" / "claims.json"


@dataclass(frozen=True)
class Settings:
    """
    Run-wide settings handed to the command functions

    :param cache_dir: directory of the persistent cache, or None to disable caching
    :param capacity: the column threshold of the capacity guard
    :param force: run computations above the capacity threshold
    """
    cache_dir: Path = None
    capacity: int = CAPACITY_THRESHOLD
    force: bool = False

    @classmethod
    def from_arguments(cls, cache_dir=None, force=False, no_cache=False) -> "Settings":
        if no_cache:
            return cls(cache_dir=None, force=force)
        return cls(cache_dir=Path(cache_dir) if cache_dir else CACHE_DIR, force=force)
