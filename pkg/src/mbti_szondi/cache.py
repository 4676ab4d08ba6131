"""Precomputed polarity tables on disk.

A cache file is JSON Lines: a header object, then one entry per indicator
set.  The header records the format name, version, entry count, and the
fingerprint of the interpretation the table was computed from; a lookup
against a different interpretation is refused rather than silently wrong.
Entries carry their serialized box list together with the claimed model
count, and every deserialization recounts the boxes, so a corrupted line
cannot return a plausible-looking set.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .boxes import ProfileSet
from .connection import all_right_polarities
from .core import GrammarError, TypeIndicator, indicator_set_from_mask, indicator_set_mask
from .interpret import Interpretation

__all__ = [
    "CACHE_FORMAT",
    "CACHE_VERSION",
    "CacheError",
    "CacheFormatError",
    "FingerprintMismatchError",
    "CorruptEntryError",
    "PolarityCache",
    "write_cache",
    "open_cache",
]

CACHE_FORMAT = "mbti-szondi-polarity-table"
CACHE_VERSION = 1
_ENTRY_COUNT = 1 << 16


class CacheError(Exception):
    """Base class for cache file problems."""


class CacheFormatError(CacheError):
    """The file is not a polarity table this code can read."""


class FingerprintMismatchError(CacheError):
    """The table was computed from a different interpretation."""

    def __init__(self, expected: str, found: str):
        self.expected = expected
        self.found = found
        super().__init__(
            f"cache was built for interpretation {found[:16]}... but the "
            f"active interpretation is {expected[:16]}..."
        )


class CorruptEntryError(CacheError):
    """An entry's stored boxes do not reproduce its claimed count."""


@dataclass
class PolarityCache:
    """An open polarity table, fully loaded and header-checked."""

    path: Path
    fingerprint: str
    created: str
    entries: dict[int, dict]

    def check_fingerprint(self, interp: Interpretation) -> None:
        expected = interp.fingerprint()
        if expected != self.fingerprint:
            raise FingerprintMismatchError(expected, self.fingerprint)

    def lookup(self, indicators: Iterable[TypeIndicator]) -> ProfileSet:
        """The stored right polarity of the set, recounted before return."""
        mask = indicator_set_mask(indicators)
        entry = self.entries.get(mask)
        if entry is None:
            raise CorruptEntryError(f"no entry for indicator-set mask {mask}")
        try:
            profile_set = ProfileSet.from_payload(entry)
        except (GrammarError, KeyError, TypeError) as exc:
            names = indicator_set_from_mask(mask)
            raise CorruptEntryError(
                f"entry for {{{','.join(i.name for i in sorted(names))}}} "
                f"failed verification: {exc}"
            ) from exc
        return profile_set

    def stored_count(self, indicators: Iterable[TypeIndicator]) -> int:
        mask = indicator_set_mask(indicators)
        entry = self.entries.get(mask)
        if entry is None:
            raise CorruptEntryError(f"no entry for indicator-set mask {mask}")
        return int(entry["count"])


def write_cache(path: str | Path, interp: Interpretation, progress: bool = False) -> Path:
    """Compute all 65,536 right polarities and write them atomically.

    The table is written to a temporary file in the destination directory
    and moved into place, so a crash cannot leave a half-written cache
    under the final name.
    """
    path = Path(path)
    polarities = all_right_polarities(interp)
    header = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "fingerprint": interp.fingerprint(),
        "entries": _ENTRY_COUNT,
        "created": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    fd, tmp_name = tempfile.mkstemp(
        dir=path.parent or Path("."), prefix=path.name, suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(header) + "\n")
            for mask, profile_set in enumerate(polarities):
                payload = profile_set.to_payload()
                payload["mask"] = mask
                handle.write(json.dumps(payload) + "\n")
                if progress and mask % 8192 == 0:
                    print(f"\r  wrote {mask:,} / {_ENTRY_COUNT:,} entries", end="", flush=True)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
    if progress:
        print(f"\r  wrote {_ENTRY_COUNT:,} / {_ENTRY_COUNT:,} entries")
    return path


def open_cache(path: str | Path) -> PolarityCache:
    """Read and structurally validate a polarity table."""
    path = Path(path)
    entries: dict[int, dict] = {}
    with open(path, encoding="utf-8") as handle:
        first = handle.readline()
        if not first:
            raise CacheFormatError(f"{path}: empty file")
        try:
            header = json.loads(first)
        except json.JSONDecodeError as exc:
            raise CacheFormatError(f"{path}: header is not JSON: {exc}") from exc
        if not isinstance(header, dict) or header.get("format") != CACHE_FORMAT:
            raise CacheFormatError(f"{path}: not a polarity table")
        if header.get("version") != CACHE_VERSION:
            raise CacheFormatError(
                f"{path}: unsupported table version {header.get('version')!r}"
            )
        declared = header.get("entries")
        if declared != _ENTRY_COUNT:
            raise CacheFormatError(
                f"{path}: header declares {declared!r} entries, expected {_ENTRY_COUNT}"
            )
        for lineno, line in enumerate(handle, start=2):
            if not line.strip():
                continue
            try:
                entry = json.loads(line)
                mask = int(entry["mask"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise CacheFormatError(f"{path}:{lineno}: bad entry: {exc}") from exc
            if not 0 <= mask < _ENTRY_COUNT or mask in entries:
                raise CacheFormatError(
                    f"{path}:{lineno}: duplicate or out-of-range mask {mask}"
                )
            entries[mask] = entry
    if len(entries) != _ENTRY_COUNT:
        raise CacheFormatError(
            f"{path}: {len(entries)} entries present, expected {_ENTRY_COUNT}"
        )
    return PolarityCache(
        path=path,
        fingerprint=str(header.get("fingerprint", "")),
        created=str(header.get("created", "")),
        entries=entries,
    )
