# SPDX-FileCopyrightText: Copyright (c) 2023, NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable
from typing import Optional

from aperylab.holonomic import SeqPair
from aperylab.utils import InputError

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


@dataclass(frozen=True)
class CacheKey:
    """
    Identifies a cached sequence pair.

    kind is "mukai" (exact a and b, prefixes of longer entries are reused) or "grassmann" (b carried at `prec` digits,
    reused only on an exact match).
    """
    kind: str
    label: str
    n_max: int
    prec: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.prec is None

    def filename(self) -> str:
        label = "".join(ch if ch.isalnum() else "_" for ch in self.label)
        suffix = "" if self.exact else f"-p{self.prec}"
        return f"{self.kind}-{label}-n{self.n_max}{suffix}.json"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "label": self.label, "n_max": self.n_max, "prec": self.prec}


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    """One cache file: the key, the serialized SeqPair and the sha256 of the payload."""
    key: CacheKey
    payload: dict
    checksum: str
    version: int = CACHE_VERSION

    @classmethod
    def of(cls, key: CacheKey, pair: SeqPair):
        payload = pair.to_dict(key.prec)
        return cls(key, payload, _checksum(payload))

    @property
    def valid(self) -> bool:
        return self.version == CACHE_VERSION and self.checksum == _checksum(self.payload)

    def to_dict(self) -> dict:
        return {"version": self.version, "key": self.key.to_dict(), "payload": self.payload, "checksum": self.checksum}

    @classmethod
    def from_dict(cls, entry: dict):
        key = CacheKey(**entry["key"])
        return cls(key, entry["payload"], entry["checksum"], entry.get("version"))


class SequenceCache:
    """
    JSON files of SeqPair payloads under one directory, each stored with a sha256 checksum of its payload.

    Writes go to a temporary file in the same directory and are moved into place with `os.replace`, so concurrent
    commands sharing the directory only ever see complete entries.
    """

    def __init__(self, cache_dir, enabled: bool = True):
        self._dir = Path(cache_dir)
        self._enabled = enabled

    @property
    def directory(self) -> Path:
        return self._dir

    def _read(self, path: Path) -> Optional[SeqPair]:
        try:
            entry = CacheEntry.from_dict(json.loads(path.read_text()))
            if not entry.valid:
                logger.warning("discarding cache entry %s: checksum or version mismatch", path.name)
                return None
            return SeqPair.from_dict(entry.payload)
        except (OSError, ValueError, KeyError, TypeError, InputError) as err:
            logger.warning("discarding unreadable cache entry %s: %s", path.name, err)
            return None

    def _candidates(self, key: CacheKey):
        if key.exact:
            prefix = CacheKey(key.kind, key.label, 0).filename().rsplit("-n", 1)[0] + "-n"
            found = []
            for path in self._dir.glob(prefix + "*.json"):
                stem = path.stem[len(prefix):]
                if stem.isdigit() and int(stem) >= key.n_max:
                    found.append((int(stem), path))
            return [path for _, path in sorted(found)]
        path = self._dir / key.filename()
        return [path] if path.exists() else []

    def get(self, key: CacheKey) -> Optional[SeqPair]:
        if not self._enabled or not self._dir.is_dir():
            return None
        for path in self._candidates(key):
            pair = self._read(path)
            if pair is not None and pair.n_max >= key.n_max:
                logger.debug("cache hit %s for %s", path.name, key)
                return pair.truncate(key.n_max)
        return None

    def put(self, key: CacheKey, pair: SeqPair):
        if not self._enabled:
            return
        self._dir.mkdir(parents=True, exist_ok=True)
        entry = CacheEntry.of(key, pair).to_dict()
        fd, tmp = tempfile.mkstemp(dir=self._dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh)
            os.replace(tmp, self._dir / key.filename())
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        logger.debug("cached %s", key.filename())

    def get_or_compute(self, key: CacheKey, compute: Callable[[], SeqPair]) -> SeqPair:
        """
        The cached pair for `key`, or `compute()` stored under `key`.

        The returned pair is always the one read back from its serialized form, so a cold and a warm run report the
        same numbers.
        """
        pair = self.get(key)
        if pair is not None:
            return pair
        pair = compute()
        if not self._enabled:
            return pair
        self.put(key, pair)
        return SeqPair.from_dict(json.loads(json.dumps(pair.to_dict(key.prec))))
