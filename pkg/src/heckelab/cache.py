"""
Versioned JSON disk cache.

Every file is self-describing: {"format": "heckelab/<kind>", "version": V,
"payload": {...}}.  Files with an unexpected format or version are ignored,
never migrated; the caller simply recomputes and overwrites.
"""

from __future__ import annotations

import json
import os
import tempfile

DEFAULT_DIR = ".hecke-lab-cache"

VERSIONS = {
    "klrow": 1,
    "chartable": 1,
    "csf": 1,
}

# process-wide default cache; None disables disk persistence
_active = None


def activate(cache) -> None:
    global _active
    _active = cache


def active():
    return _active


class Cache:
    def __init__(self, directory: str = DEFAULT_DIR):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, name: str) -> str:
        return os.path.join(self.directory, f"{name}.json")

    def load(self, kind: str, name: str):
        path = self._path(name)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return None
        if (data.get("format") != f"heckelab/{kind}"
                or data.get("version") != VERSIONS[kind]):
            return None
        return data.get("payload")

    def store(self, kind: str, name: str, payload) -> None:
        data = {
            "format": f"heckelab/{kind}",
            "version": VERSIONS[kind],
            "payload": payload,
        }
        path = self._path(name)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(data, fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
