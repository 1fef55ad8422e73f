"""Plain-text fixture tables bundled with the package.

Every fixture file holds one entry per line in the shape

    label | value | provenance

with '#' comment lines and blank lines ignored.  The provenance column says
what the value is, so a failing comparison can be traced without opening
anything else.
"""

from __future__ import annotations

from importlib import resources
from typing import NamedTuple


class FixtureEntry(NamedTuple):
    label: str
    value: str
    provenance: str


def load_entries(name: str) -> list[FixtureEntry]:
    text = (resources.files(__name__) / name).read_text(encoding="utf-8")
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [part.strip() for part in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"{name}:{lineno}: expected 'label | value | provenance'")
        entries.append(FixtureEntry(*parts))
    return entries
