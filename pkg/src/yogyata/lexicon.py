"""Verbal roots with kāraka expectancy, prefixes, and sense-tagged lexemes.

Everything here is immutable after load; the ontology passed to the loaders
is the single authority for tag validity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Optional

from .errors import (
    EmptyExpectancyError,
    MissingSandhiError,
    NotFoundError,
    ParseError,
    ValidationError,
)
from .jsonio import canonical_dumps, expect_key, loads
from .ontology import Ontology


class KarakaRole(enum.Enum):
    """The closed six-role set, in Paninian order."""

    KARTA = "karta"
    KARMA = "karma"
    KARANA = "karana"
    SAMPRADANA = "sampradana"
    APADANA = "apadana"
    ADHIKARANA = "adhikarana"

    @property
    def label(self) -> str:
        return _ROLE_LABELS[self]

    @property
    def index(self) -> int:
        return _ROLE_ORDER[self]

    @classmethod
    def parse(cls, text: str) -> "KarakaRole":
        """Accept either the ASCII id or the IAST label."""
        key = text.strip()
        for role in cls:
            if key == role.value or key == role.label:
                return role
        raise ValidationError(f"unknown karaka role {text!r}; expected one of "
                              f"{[r.value for r in cls]}")


_ROLE_LABELS = {
    KarakaRole.KARTA: "kartā",
    KarakaRole.KARMA: "karma",
    KarakaRole.KARANA: "karaṇa",
    KarakaRole.SAMPRADANA: "sampradāna",
    KarakaRole.APADANA: "apādāna",
    KarakaRole.ADHIKARANA: "adhikaraṇa",
}
_ROLE_ORDER = {role: i for i, role in enumerate(KarakaRole)}

ALL_ROLES = frozenset(KarakaRole)


def sort_roles(roles) -> list[KarakaRole]:
    return sorted(roles, key=lambda r: r.index)


def role_ids(roles) -> list[str]:
    return [r.value for r in sort_roles(roles)]


#: Semantic classes named in the root inventory; other labels are allowed as-is.
KNOWN_SEMANTIC_CLASSES = frozenset({"gati", "bhaya", "raksana", "kutsa", "anadara"})


@dataclass(frozen=True)
class Prefix:
    """An upasarga from the fixed seed inventory."""

    form: str


@dataclass(frozen=True)
class DhatuEntry:
    root: str
    artha: str
    semantic_class: str
    expectancy: frozenset[KarakaRole]
    role_requirements: Mapping[KarakaRole, frozenset[str]] = field(default_factory=dict)
    provenance: Optional[str] = None
    unverified: bool = False

    def requirement(self, role: KarakaRole) -> frozenset[str]:
        return self.role_requirements.get(role, frozenset())


@dataclass(frozen=True)
class LWord:
    """A (prefix+)root pairing; the sandhi form is always entered manually."""

    dhatu: str
    prefix: Optional[str] = None
    sandhi_form: str = ""
    changed_artha: Optional[str] = None

    @property
    def key(self) -> tuple:
        """Identity for rule lookup; changed_artha is annotation payload."""
        return (self.prefix, self.dhatu, self.sandhi_form)

    def display(self) -> str:
        if self.prefix:
            return f"{self.sandhi_form} ({self.prefix}+{self.dhatu})"
        return self.sandhi_form


@dataclass(frozen=True)
class LexemeSense:
    sense_id: int
    gloss: str
    tag: str


@dataclass(frozen=True)
class LexemeEntry:
    headword: str
    senses: tuple[LexemeSense, ...]

    def sense(self, sense_id: int) -> LexemeSense:
        for s in self.senses:
            if s.sense_id == sense_id:
                return s
        raise NotFoundError(f"lexeme {self.headword!r} has no sense {sense_id}")

    def has_sense(self, sense_id: int) -> bool:
        return any(s.sense_id == sense_id for s in self.senses)


class Lexicon:
    """Read-only bundle of roots, prefixes and lexemes against one ontology."""

    def __init__(self, ontology: Ontology, dhatus: Mapping[str, DhatuEntry],
                 lexemes: Mapping[str, LexemeEntry], prefixes=()):
        self.ontology = ontology
        self._dhatus = dict(dhatus)
        self._lexemes = dict(lexemes)
        self.prefixes: tuple[Prefix, ...] = tuple(prefixes)
        self._prefix_forms = {p.form for p in self.prefixes}

    # -- lookups ---------------------------------------------------------

    def get_dhatu(self, root: str) -> DhatuEntry:
        try:
            return self._dhatus[root]
        except KeyError:
            raise NotFoundError(f"unknown dhatu {root!r}") from None

    def has_dhatu(self, root: str) -> bool:
        return root in self._dhatus

    def get_lexeme(self, headword: str) -> LexemeEntry:
        try:
            return self._lexemes[headword]
        except KeyError:
            raise NotFoundError(f"unknown headword {headword!r}") from None

    def has_lexeme(self, headword: str) -> bool:
        return headword in self._lexemes

    def dhatu_roots(self) -> list[str]:
        return sorted(self._dhatus)

    def headwords(self) -> list[str]:
        return sorted(self._lexemes)

    # -- L-word composition ---------------------------------------------

    def compose_lword(self, prefix: Optional[str], root: str,
                      sandhi_form: Optional[str] = None,
                      changed_artha: Optional[str] = None) -> LWord:
        """Build an L-word; prefixed forms require a manually entered sandhi."""
        self.get_dhatu(root)
        if prefix is not None:
            if prefix not in self._prefix_forms:
                raise NotFoundError(f"unknown prefix {prefix!r}")
            if not sandhi_form:
                raise MissingSandhiError(
                    f"prefix {prefix!r} on root {root!r} requires a manually "
                    f"entered sandhi form")
        if sandhi_form is None:
            sandhi_form = root
        return LWord(dhatu=root, prefix=prefix, sandhi_form=sandhi_form,
                     changed_artha=changed_artha)


# ---------------------------------------------------------------------------
# Loaders / serializers
# ---------------------------------------------------------------------------


def load_dhatus(text: str, ontology: Ontology) -> dict[str, DhatuEntry]:
    doc = loads(text, "dhatus")
    records = expect_key(doc, "dhatus", "dhatus") if isinstance(doc, dict) else doc
    if not isinstance(records, list):
        raise ParseError("dhatus: 'dhatus' must be a list of records")
    entries: dict[str, DhatuEntry] = {}
    for record in records:
        root = expect_key(record, "root", "dhatus")
        if root in entries:
            raise ParseError(f"dhatus: duplicate root {root!r}")
        raw_exp = expect_key(record, "expectancy", "dhatus")
        if not raw_exp:
            raise EmptyExpectancyError(f"dhatu {root!r} declares an empty expectancy set")
        expectancy = frozenset(KarakaRole.parse(r) for r in raw_exp)
        requirements: dict[KarakaRole, frozenset[str]] = {}
        for role_name, tag_ids in (record.get("role_requirements") or {}).items():
            role = KarakaRole.parse(role_name)
            if role not in expectancy:
                raise ValidationError(
                    f"dhatu {root!r}: requirement for {role.value} but "
                    f"{role.value} is not in its expectancy {role_ids(expectancy)}")
            for tag_id in tag_ids:
                ontology.require(tag_id, f"dhatu {root!r} requirement for {role.value}")
            requirements[role] = frozenset(tag_ids)
        entries[root] = DhatuEntry(
            root=root,
            artha=str(record.get("artha", "")),
            semantic_class=str(expect_key(record, "semantic_class", "dhatus")),
            expectancy=expectancy,
            role_requirements=MappingProxyType(requirements),
            provenance=record.get("provenance"),
            unverified=bool(record.get("unverified", False)),
        )
    return entries


def dhatu_record(entry: DhatuEntry) -> dict:
    """One root as a plain record, fixed key order."""
    return {
        "root": entry.root,
        "artha": entry.artha,
        "semantic_class": entry.semantic_class,
        "expectancy": role_ids(entry.expectancy),
        "role_requirements": {
            role.value: sorted(entry.role_requirements[role])
            for role in sort_roles(entry.role_requirements)
        },
        "provenance": entry.provenance,
        "unverified": entry.unverified,
    }


def serialize_dhatus(dhatus: Mapping[str, DhatuEntry]) -> str:
    return canonical_dumps({"dhatus": [dhatu_record(dhatus[r]) for r in sorted(dhatus)]})


def load_lexemes(text: str, ontology: Ontology) -> dict[str, LexemeEntry]:
    doc = loads(text, "lexicon")
    records = expect_key(doc, "lexemes", "lexicon") if isinstance(doc, dict) else doc
    if not isinstance(records, list):
        raise ParseError("lexicon: 'lexemes' must be a list of records")
    entries: dict[str, LexemeEntry] = {}
    for record in records:
        headword = expect_key(record, "headword", "lexicon")
        if headword in entries:
            raise ParseError(f"lexicon: duplicate headword {headword!r}")
        raw_senses = expect_key(record, "senses", "lexicon")
        if not raw_senses:
            raise ValidationError(f"lexeme {headword!r} has no senses")
        senses = []
        for i, raw in enumerate(raw_senses, start=1):
            sense_id = int(expect_key(raw, "sense_id", "lexicon"))
            if sense_id != i:
                raise ValidationError(
                    f"lexeme {headword!r}: sense_ids must increase from 1; "
                    f"found {sense_id} at position {i}")
            tag = expect_key(raw, "tag", "lexicon")
            ontology.require(tag, f"lexeme {headword!r} sense {sense_id}")
            senses.append(LexemeSense(sense_id=sense_id,
                                      gloss=str(expect_key(raw, "gloss", "lexicon")),
                                      tag=tag))
        entries[headword] = LexemeEntry(headword=headword, senses=tuple(senses))
    return entries


def lexeme_record(entry: LexemeEntry) -> dict:
    """One headword with all senses as a plain record, fixed key order."""
    return {
        "headword": entry.headword,
        "senses": [
            {"sense_id": s.sense_id, "gloss": s.gloss, "tag": s.tag}
            for s in entry.senses
        ],
    }


def serialize_lexemes(lexemes: Mapping[str, LexemeEntry]) -> str:
    return canonical_dumps({"lexemes": [lexeme_record(lexemes[h]) for h in sorted(lexemes)]})


def load_prefixes(text: str) -> tuple[Prefix, ...]:
    doc = loads(text, "prefixes")
    forms = expect_key(doc, "prefixes", "prefixes") if isinstance(doc, dict) else doc
    if not isinstance(forms, list) or not all(isinstance(f, str) and f for f in forms):
        raise ParseError("prefixes: 'prefixes' must be a list of non-empty strings")
    return tuple(Prefix(form=f) for f in forms)


def serialize_prefixes(prefixes) -> str:
    return canonical_dumps({"prefixes": [p.form for p in prefixes]})


def load_lexicon_dir(ontology: Ontology, data_dir) -> Lexicon:
    """Assemble a lexicon from dhatus.json / lexicon.json / prefixes.json."""
    data_dir = Path(data_dir)
    dhatus = load_dhatus((data_dir / "dhatus.json").read_text(encoding="utf-8"), ontology)
    lexemes = load_lexemes((data_dir / "lexicon.json").read_text(encoding="utf-8"), ontology)
    prefixes = load_prefixes((data_dir / "prefixes.json").read_text(encoding="utf-8"))
    return Lexicon(ontology, dhatus, lexemes, prefixes)
