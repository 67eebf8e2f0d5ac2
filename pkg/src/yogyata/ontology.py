"""Ontological tag-set: a DAG of semantic categories with subsumption queries.

Tag ids are ASCII-safe slugs (stable keys); labels carry IAST diacritics.
The ontology is immutable after load and safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import CycleError, DanglingParentError, ParseError, UnknownTagError
from .jsonio import canonical_dumps, expect_key, loads

#: Tag id of the substance branch; kāraka roles may only be filled by senses
#: whose tag falls under it (a quality needs a substance as its locus).
DRAVYA = "dravya"


@dataclass(frozen=True)
class OntologyTag:
    id: str
    label: str
    parents: frozenset[str] = field(default_factory=frozenset)
    description: str = ""


class Ontology:
    """Validated tag DAG with precomputed ancestor closure."""

    def __init__(self, tags: dict[str, OntologyTag]):
        self._tags = dict(tags)
        self._check_references()
        self._ancestors = self._close()  # id -> frozenset of ancestors incl. self
        self.roots = frozenset(t.id for t in self._tags.values() if not t.parents)

    def _check_references(self) -> None:
        for tag in self._tags.values():
            for parent in tag.parents:
                if parent not in self._tags:
                    raise DanglingParentError(tag.id, parent)

    def _close(self) -> dict[str, frozenset[str]]:
        closure: dict[str, frozenset[str]] = {}
        visiting: set[str] = set()

        def visit(tag_id: str) -> frozenset[str]:
            if tag_id in closure:
                return closure[tag_id]
            if tag_id in visiting:
                raise CycleError(tag_id)
            visiting.add(tag_id)
            acc = {tag_id}
            for parent in self._tags[tag_id].parents:
                acc |= visit(parent)
            visiting.discard(tag_id)
            closure[tag_id] = frozenset(acc)
            return closure[tag_id]

        for tag_id in self._tags:
            visit(tag_id)
        return closure

    def __contains__(self, tag_id: str) -> bool:
        return tag_id in self._tags

    def __getitem__(self, tag_id: str) -> OntologyTag:
        try:
            return self._tags[tag_id]
        except KeyError:
            raise UnknownTagError(tag_id) from None

    def __len__(self) -> int:
        return len(self._tags)

    def ids(self) -> list[str]:
        return sorted(self._tags)

    def tags(self) -> list[OntologyTag]:
        return [self._tags[i] for i in self.ids()]

    def require(self, tag_id: str, context: str = "") -> None:
        if tag_id not in self._tags:
            raise UnknownTagError(tag_id, context)

    def ancestors(self, tag_id: str) -> frozenset[str]:
        """All tags reachable via parent edges, including the tag itself."""
        self.require(tag_id)
        return self._ancestors[tag_id]

    def subsumes(self, ancestor: str, descendant: str) -> bool:
        """True iff descendant equals ancestor or reaches it via parent edges."""
        self.require(ancestor)
        self.require(descendant)
        return ancestor in self._ancestors[descendant]

    def compatible(self, tag_id: str, requirement) -> bool:
        """Any-of satisfaction: empty requirement means unconstrained."""
        self.require(tag_id)
        requirement = list(requirement)
        for req in requirement:
            self.require(req, "requirement member")
        if not requirement:
            return True
        return any(self.subsumes(req, tag_id) for req in requirement)

    def under_dravya(self, tag_id: str) -> bool:
        """Whether the tag falls under the substance branch.

        Vacuously true for ontologies that do not define a dravya node.
        """
        if DRAVYA not in self._tags:
            return True
        return self.subsumes(DRAVYA, tag_id)


def load_ontology(text: str) -> Ontology:
    """Parse and validate an ontology document (see serialize_ontology)."""
    doc = loads(text, "ontology")
    records = expect_key(doc, "tags", "ontology") if isinstance(doc, dict) else doc
    if not isinstance(records, list):
        raise ParseError("ontology: 'tags' must be a list of records")
    tags: dict[str, OntologyTag] = {}
    for record in records:
        tag_id = expect_key(record, "id", "ontology")
        label = expect_key(record, "label", "ontology")
        parents = record.get("parents", [])
        if not isinstance(tag_id, str) or not tag_id:
            raise ParseError(f"ontology: field 'id' must be a non-empty string, got {tag_id!r}")
        if tag_id in tags:
            raise ParseError(f"ontology: duplicate tag id {tag_id!r}")
        if not isinstance(parents, list) or not all(isinstance(p, str) for p in parents):
            raise ParseError(f"ontology: record {tag_id!r} field 'parents' must be a list of ids")
        tags[tag_id] = OntologyTag(
            id=tag_id,
            label=str(label),
            parents=frozenset(parents),
            description=str(record.get("description", "")),
        )
    return Ontology(tags)


def load_ontology_file(path) -> Ontology:
    return load_ontology(Path(path).read_text(encoding="utf-8"))


def serialize_ontology(ontology: Ontology) -> str:
    """Canonical document: tags sorted by id, parents sorted, fixed key order."""
    records = []
    for tag in ontology.tags():
        records.append(
            {
                "id": tag.id,
                "label": tag.label,
                "parents": sorted(tag.parents),
                "description": tag.description,
            }
        )
    return canonical_dumps({"tags": records})
