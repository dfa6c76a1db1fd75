"""Bundled example catalog.

Each entry is one JSON file ``<id>.json`` holding ``id``, ``kind``,
``payload`` and optionally ``expected``: named values with a ``source``
(``published`` or ``derived``) and a free-text ``note``.  The directory
can be redirected with the ``DIVSTAB_CATALOG_DIR`` environment variable.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import jsonio

KINDS = ("fan", "sequence", "okounkov_body", "curve_blowup_params")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    payload: dict
    expected: dict = field(default_factory=dict)

    def parse(self):
        """The domain object the payload describes."""
        return jsonio.PARSERS[self.kind][0](self.payload)

    def to_json(self) -> dict:
        doc = {"id": self.id, "kind": self.kind, "payload": self.payload}
        if self.expected:
            doc["expected"] = self.expected
        return doc


def catalog_dir() -> Path:
    override = os.environ.get("DIVSTAB_CATALOG_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files("divstab") / "catalog"))


def _entry_from_doc(doc: dict) -> CatalogEntry:
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValueError(f"unknown catalog kind {kind!r}")
    expected = doc.get("expected", {})
    for name, item in expected.items():
        if item.get("source") not in ("published", "derived"):
            raise ValueError(f"expected value {name!r} needs source 'published' or 'derived'")
        if not item.get("note"):
            raise ValueError(f"expected value {name!r} needs a note naming its citation or oracle")
    return CatalogEntry(doc["id"], kind, doc["payload"], expected)


def load_entry(entry_id: str) -> CatalogEntry:
    path = catalog_dir() / f"{entry_id}.json"
    if not path.is_file():
        raise KeyError(f"no catalog entry {entry_id!r} in {catalog_dir()}")
    return _entry_from_doc(jsonio.loads(path.read_text()))


def entry_ids() -> list[str]:
    return sorted(p.stem for p in catalog_dir().glob("*.json"))


def entries(kind: str | None = None) -> list[CatalogEntry]:
    out = [load_entry(i) for i in entry_ids()]
    return [e for e in out if kind is None or e.kind == kind]


def load_document(path: str | os.PathLike) -> tuple[str | None, dict]:
    """Read a user JSON file; returns ``(kind, payload)``.

    A file may be a bare payload or a whole catalog-entry document.
    """
    doc = jsonio.loads(Path(path).read_text())
    if not isinstance(doc, dict):
        raise ValueError("top-level JSON value must be an object")
    if "payload" in doc:
        return doc.get("kind"), doc["payload"]
    return None, doc
