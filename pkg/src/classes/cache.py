from __future__ import annotations

import hashlib
import json
import logging
import os
import pickle
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from classes import config
from classes.cohit_basis import CohitBasis, cohit_basis
from classes.errors import CacheError
from classes.hit_space import HitSpace, hit_span
from classes.monomial import sorted_monomials

logger = logging.getLogger(__name__)


def _atomic_write_bytes(path: Path, data: bytes):
    tmp = path.with_name("{}.tmp.{}".format(path.name, os.getpid()))
    with tmp.open("wb") as f:
        f.write(data)
        f.flush()
        os.fsync(f.fileno())
    os.replace(str(tmp), str(path))


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    """
    The sidecar of a cached hit space

    :param h: the number of variables
    :param n: the degree
    :param schema: the schema version the entry was written under
    :param checksum: SHA-256 of the pickled payload
    :param rank: the rank of the hit space
    :param dim: the dimension of QP_n
    """
    h: int
    n: int
    schema: int
    checksum: str
    rank: int
    dim: int

    def to_json(self) -> dict:
        return {"key": [self.h, self.n], "schema": self.schema, "sha256": self.checksum, "rank": self.rank,
                "dim": self.dim}

    @classmethod
    def from_json(cls, payload: dict) -> CacheEntry:
        h, n = payload["key"]
        return cls(h, n, payload["schema"], payload["sha256"], payload["rank"], payload["dim"])


class Cache:
    """
    A directory of echelonized hit spaces keyed by (h, n). Each entry is a pickle of the echelon rows next to a JSON
    sidecar holding the schema version and a checksum; entries that fail either check are recomputed.

    Payloads are read with pickle.loads, so the directory must be writable only by users whose files you would
    execute. The checksum sits next to the payload in the same directory: it catches truncated or corrupted
    writes, not a deliberate replacement of both files.

    :param directory: the cache directory, or None to keep everything in memory only
    :param capacity: the column threshold of the capacity guard
    :param force: bool, ignore the capacity guard
    :param verbose: bool, show progress bars while computing
    """

    def __init__(self, directory: Optional[Path] = None, capacity: int = config.CAPACITY_THRESHOLD,
                 force: bool = False, verbose: bool = False):
        self.directory = Path(directory) if directory is not None else None
        self.capacity = capacity
        self.force = force
        self.verbose = verbose
        self._memory = {}

    @classmethod
    def from_settings(cls, settings: config.Settings, verbose: bool = False) -> Cache:
        return cls(settings.cache_dir, settings.capacity, settings.force, verbose)

    def _paths(self, h: int, n: int):
        stem = "hit_h{}_n{}".format(h, n)
        return self.directory / (stem + ".pkl"), self.directory / (stem + ".json")

    def load(self, h: int, n: int) -> HitSpace:
        """
        Reads a cached hit space

        :raises CacheError: on a missing entry, a schema mismatch or a checksum mismatch
        """
        if self.directory is None:
            raise CacheError("Caching is disabled")
        payload_path, sidecar_path = self._paths(h, n)
        if not payload_path.exists() or not sidecar_path.exists():
            raise CacheError("No cache entry for ({}, {})".format(h, n))
        try:
            entry = CacheEntry.from_json(json.loads(sidecar_path.read_text()))
        except (ValueError, KeyError, TypeError) as e:
            raise CacheError("Unreadable sidecar {}: {}".format(sidecar_path, e)) from e
        if entry.schema != config.SCHEMA_VERSION:
            raise CacheError("Entry ({}, {}) has schema {}, expected {}".format(h, n, entry.schema,
                                                                                config.SCHEMA_VERSION))
        if (entry.h, entry.n) != (h, n):
            raise CacheError("Sidecar {} is keyed ({}, {})".format(sidecar_path, entry.h, entry.n))
        data = payload_path.read_bytes()
        if sha256_bytes(data) != entry.checksum:
            raise CacheError("Checksum mismatch for ({}, {})".format(h, n))
        echelon = pickle.loads(data)
        space = HitSpace(h, n, sorted_monomials(h, n), echelon)
        if space.rank != entry.rank:
            raise CacheError("Entry ({}, {}) has rank {}, sidecar says {}".format(h, n, space.rank, entry.rank))
        return space

    def store(self, space: HitSpace):
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        payload_path, sidecar_path = self._paths(space.h, space.n)
        data = pickle.dumps(space.echelon, protocol=pickle.HIGHEST_PROTOCOL)
        entry = CacheEntry(space.h, space.n, config.SCHEMA_VERSION, sha256_bytes(data), space.rank,
                           space.n_columns - space.rank)
        # The payload goes first so a reader never sees a sidecar without its payload
        _atomic_write_bytes(payload_path, data)
        _atomic_write_bytes(sidecar_path, (json.dumps(entry.to_json(), indent=2, sort_keys=True) + "\n").encode())
        logger.debug("Cached hit space (%d, %d) in %s", space.h, space.n, payload_path)

    def hit_space(self, h: int, n: int) -> HitSpace:
        """
        The hit space of (h, n) from memory, then disk, then computed and stored
        """
        key = (h, n)
        if key in self._memory:
            return self._memory[key]
        space = None
        if self.directory is not None:
            try:
                space = self.load(h, n)
                logger.debug("Cache hit (%d, %d)", h, n)
            except CacheError as e:
                logger.debug("Cache miss (%d, %d): %s", h, n, e)
                if self._paths(h, n)[0].exists():
                    logger.warning("Discarding cache entry (%d, %d): %s", h, n, e)
        if space is None:
            space = hit_span(h, n, capacity=self.capacity, force=self.force, verbose=self.verbose)
            self.store(space)
        self._memory[key] = space
        return space

    def basis_of(self, h: int, n: int) -> CohitBasis:
        return cohit_basis(h, n, hit_space=self.hit_space(h, n))
