"""Flat-file catalog: graphs (.el), drawings (.emb) and obstruction sets.

Layout under the catalog root::

    manifest.tsv                       named graphs and drawings
    projective_obstructions/           35 graphs + manifest.tsv
    outer_projective_obstructions/     32 graphs + manifest.tsv + certificates.tsv

Every manifest has the columns name, file, expected_vertices,
expected_edges, provenance and an optional sixth column of key=value notes.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass, field
from pathlib import Path

from .embedding import EmbeddingError, Rp2Embedding, read_emb
from .graph import Graph, GraphError, read_el
from .minors import (CatalogEntry, CatalogInvalid, CatalogMissing, MinorCertificate, ObstructionSet,
                     default_data_dir, load_obstruction_set, read_manifest)

PROJECTIVE = "projective_obstructions"
OUTER = "outer_projective_obstructions"


def _notes(path: Path) -> dict[str, dict[str, str]]:
    """The optional sixth manifest column, parsed per row name."""
    out: dict[str, dict[str, str]] = {}
    with path.open(newline="") as fh:
        for r in csv.reader(fh, delimiter="\t"):
            if len(r) >= 6 and r[0] != "name" and not r[0].startswith("#"):
                out[r[0]] = dict(kv.split("=", 1) for kv in r[5].split(",") if "=" in kv)
    return out


@dataclass
class Catalog:
    root: Path
    entries: list[CatalogEntry] = field(default_factory=list)
    notes: dict[str, dict[str, str]] = field(default_factory=dict)

    @classmethod
    def open(cls, root: str | Path | None = None) -> "Catalog":
        root = Path(root) if root is not None else default_data_dir()
        manifest = root / "manifest.tsv"
        if not manifest.is_file():
            raise CatalogMissing(f"no catalog manifest at {manifest}")
        return cls(root, read_manifest(manifest), _notes(manifest))

    def entry(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise CatalogMissing(f"catalog has no entry {name!r}")

    def graph(self, name: str) -> Graph:
        e = self.entry(name)
        path = self.root / e.file
        if not path.is_file():
            raise CatalogMissing(f"missing catalog file {path}")
        g = read_el(path).named(name) if path.suffix == ".el" else self.drawing(name).graph
        if (g.n, g.m) != (e.expected_vertices, e.expected_edges):
            raise CatalogInvalid(f"{name}: expected {e.expected_vertices}/{e.expected_edges}, got {g.n}/{g.m}")
        return g

    def drawing(self, name: str) -> Rp2Embedding:
        e = self.entry(name)
        path = self.root / e.file
        if not path.is_file():
            raise CatalogMissing(f"missing catalog file {path}")
        emb = read_emb(path)
        if (emb.graph.n, emb.graph.m) != (e.expected_vertices, e.expected_edges):
            raise CatalogInvalid(f"{name}: expected {e.expected_vertices}/{e.expected_edges}, "
                                 f"got {emb.graph.n}/{emb.graph.m}")
        return emb

    def drawings(self) -> list[str]:
        return [e.name for e in self.entries if e.file.endswith(".emb")]

    def validate(self) -> None:
        """Parse every row of every manifest and check its counts."""
        for e in self.entries:
            try:
                self.drawing(e.name) if e.file.endswith(".emb") else self.graph(e.name)
            except (GraphError, EmbeddingError) as exc:
                raise CatalogInvalid(f"{e.name}: {exc}") from None
        self.projective()
        if self.has_outer():
            self.outer()

    def projective(self) -> ObstructionSet:
        return load_obstruction_set(self.root / PROJECTIVE, "projective-plane obstructions", expected_count=35)

    def has_outer(self) -> bool:
        return (self.root / OUTER / "manifest.tsv").is_file()

    def outer(self) -> ObstructionSet:
        return load_obstruction_set(self.root / OUTER, "outer-projective-plane obstructions", expected_count=32)

    def outer_certificates(self) -> dict[str, tuple[str, MinorCertificate]]:
        """Stored certificates: obstruction name -> (pattern name, branch sets in G + 2K1)."""
        path = self.root / OUTER / "certificates.tsv"
        if not path.is_file():
            raise CatalogMissing(f"no certificate file at {path}")
        out = {}
        with path.open(newline="") as fh:
            rows = [r for r in csv.reader(fh, delimiter="\t") if r and not r[0].startswith("#")]
        if not rows or rows[0][:3] != ["name", "pattern", "branch_sets"]:
            raise CatalogInvalid(f"{path}: bad header")
        for r in rows[1:]:
            try:
                sets = tuple(frozenset(int(x) for x in part.split()) for part in r[2].split("|"))
            except ValueError:
                raise CatalogInvalid(f"{path}: malformed branch sets for {r[0]}") from None
            out[r[0]] = (r[1], MinorCertificate(sets))
        return out

    def digest(self) -> str:
        """sha256 over every manifest and every file it lists, in path order."""
        h = hashlib.sha256()
        files = set()
        for manifest in sorted(self.root.rglob("manifest.tsv")):
            files.add(manifest)
            for e in read_manifest(manifest):
                files.add(manifest.parent / e.file)
        extra = self.root / OUTER / "certificates.tsv"
        if extra.is_file():
            files.add(extra)
        for f in sorted(files):
            h.update(str(f.relative_to(self.root)).encode() + b"\0")
            h.update(f.read_bytes() if f.is_file() else b"<missing>")
        return h.hexdigest()
