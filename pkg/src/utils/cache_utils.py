"""
Utility functions for the append-only result cache.

Each line of the cache file is a JSON record
{"key": sha256(canonical query), "payload": <document JSON>, "checksum": sha256(payload)}.
Records that fail to decode or whose checksum does not match are skipped.
"""

import hashlib
import json
import logging
import os
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def make_key(command: str, **fields: Any) -> str:
    """Content address of a query: the command and its canonical fields."""
    return _sha256(json.dumps({"command": command, **fields}, sort_keys=True))


class ResultCache:
    """Append-only JSON-lines store of computed result documents."""

    def __init__(self, path: str):
        """
        Initialize the cache.

        Args:
            path: Cache file; created on first store
        """
        self.path = path

    def lookup(self, key: str) -> Optional[Dict[str, Any]]:
        """
        Find the latest intact record for key.

        Returns:
            The stored document, or None
        """
        if not os.path.exists(self.path):
            return None
        found = None
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                for number, line in enumerate(f, 1):
                    if not line.strip():
                        continue
                    try:
                        record = json.loads(line)
                        payload = record["payload"]
                        if record["checksum"] != _sha256(payload):
                            raise ValueError("checksum mismatch")
                        if record["key"] == key:
                            found = json.loads(payload)
                    except (ValueError, KeyError, TypeError) as e:
                        logger.warning("Skipping corrupt cache record %s:%d (%s)", self.path, number, e)
        except OSError as e:
            logger.warning("Cannot read cache %s: %s", self.path, e)
            return None
        return found

    def store(self, key: str, document: Dict[str, Any]) -> bool:
        """
        Append a record; an unwritable cache only logs a warning.

        Returns:
            Whether the record was written
        """
        payload = json.dumps(document, sort_keys=True)
        record = {"key": key, "payload": payload, "checksum": _sha256(payload)}
        try:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(json.dumps(record, sort_keys=True) + "\n")
        except OSError as e:
            logger.warning("Cache %s is not writable, continuing uncached: %s", self.path, e)
            return False
        return True
