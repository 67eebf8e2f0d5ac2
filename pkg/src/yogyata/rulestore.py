"""Persistent store for yogyata rules.

One rule binds an L-word (optional prefix + root, manual sandhi form) to a
specific sense of a headword and records the karaka roles that pairing may
fill. Durability comes from an append-only JSONL journal replayed on open;
deletes are tombstones so the annotation record stays auditable. Mutations
are serialized under a lock, reads see consistent snapshots.
"""

from __future__ import annotations

import datetime as dt
import json
import os
import threading
import uuid
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .errors import (
    DuplicateRuleError,
    NotFoundError,
    ParseError,
    ValidationError,
)
from .lexicon import KarakaRole, Lexicon, LWord, role_ids, sort_roles

#: Fixed field order of one exported rule record.
EXPORT_FIELDS = (
    "id", "prefix", "dhatu", "sandhi_form", "changed_artha",
    "headword", "sense_id", "roles", "comment", "annotator", "created_at",
)


@dataclass(frozen=True)
class YogyataRule:
    id: str
    l_word: LWord
    headword: str
    sense_id: int
    roles: frozenset[KarakaRole]
    comment: Optional[str]
    annotator: str
    created_at: dt.datetime

    @property
    def triple(self) -> tuple:
        return (*self.l_word.key, self.headword, self.sense_id)

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "prefix": self.l_word.prefix,
            "dhatu": self.l_word.dhatu,
            "sandhi_form": self.l_word.sandhi_form,
            "changed_artha": self.l_word.changed_artha,
            "headword": self.headword,
            "sense_id": self.sense_id,
            "roles": role_ids(self.roles),
            "comment": self.comment,
            "annotator": self.annotator,
            "created_at": self.created_at.isoformat(),
        }


def _parse_timestamp(raw: str) -> dt.datetime:
    try:
        ts = dt.datetime.fromisoformat(raw)
    except (TypeError, ValueError):
        raise ParseError(f"rule record: bad created_at {raw!r}") from None
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=dt.timezone.utc)
    return ts.astimezone(dt.timezone.utc)


def rule_from_record(record: dict, lexicon: Lexicon) -> YogyataRule:
    """Build and validate a rule from its export/journal record."""
    for key in ("id", "dhatu", "headword", "sense_id", "roles", "annotator", "created_at"):
        if key not in record:
            raise ParseError(f"rule record {record.get('id', '?')!r}: missing field {key!r}")
    l_word = lexicon.compose_lword(
        prefix=record.get("prefix"),
        root=record["dhatu"],
        sandhi_form=record.get("sandhi_form"),
        changed_artha=record.get("changed_artha"),
    )
    roles = frozenset(KarakaRole.parse(r) for r in record["roles"])
    rule = YogyataRule(
        id=str(record["id"]),
        l_word=l_word,
        headword=record["headword"],
        sense_id=int(record["sense_id"]),
        roles=roles,
        comment=record.get("comment"),
        annotator=str(record["annotator"]),
        created_at=_parse_timestamp(record["created_at"]),
    )
    validate_rule(rule, lexicon)
    return rule


def validate_rule(rule: YogyataRule, lexicon: Lexicon) -> None:
    if not rule.roles:
        raise ValidationError(f"rule {rule.id!r}: empty role set")
    if not rule.annotator:
        raise ValidationError(f"rule {rule.id!r}: missing annotator")
    dhatu = lexicon.get_dhatu(rule.l_word.dhatu)
    extra = rule.roles - dhatu.expectancy
    if extra:
        offending = ", ".join(r.label for r in sort_roles(extra))
        expectancy = ", ".join(r.label for r in sort_roles(dhatu.expectancy))
        raise ValidationError(
            f"role {offending} not in expectancy of {dhatu.root!r} "
            f"{{{expectancy}}}")
    lexeme = lexicon.get_lexeme(rule.headword)
    if not lexeme.has_sense(rule.sense_id):
        raise NotFoundError(
            f"lexeme {rule.headword!r} has no sense {rule.sense_id}")


@dataclass
class _Stored:
    rule: YogyataRule
    active: bool = True
    deleted_by: Optional[str] = None
    deleted_at: Optional[dt.datetime] = None


class RuleStore:
    """Single-writer embedded store; pass path=None for a purely in-memory one."""

    def __init__(self, lexicon: Lexicon, path=None):
        self.lexicon = lexicon
        self._path = Path(path) if path is not None else None
        self._lock = threading.RLock()
        self._rules: dict[str, _Stored] = {}
        self._active_by_triple: dict[tuple, str] = {}
        if self._path is not None and self._path.exists():
            self._replay()

    # -- journal ---------------------------------------------------------

    def _replay(self) -> None:
        text = self._path.read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"rule journal line {lineno}: {exc.msg}") from exc
            op = entry.get("op")
            if op == "create":
                rule = rule_from_record(entry["rule"], self.lexicon)
                self._install(rule)
            elif op == "delete":
                self._mark_deleted(entry["id"], entry.get("annotator", ""),
                                   _parse_timestamp(entry["deleted_at"]))
            else:
                raise ParseError(f"rule journal line {lineno}: unknown op {op!r}")

    def _append(self, entry: dict) -> None:
        if self._path is None:
            return
        line = json.dumps(entry, ensure_ascii=False) + "\n"
        with open(self._path, "a", encoding="utf-8") as fh:
            fh.write(line)
            fh.flush()
            os.fsync(fh.fileno())

    # -- state transitions (caller holds the lock) -----------------------

    def _install(self, rule: YogyataRule) -> None:
        if rule.id in self._rules:
            raise ValidationError(f"duplicate rule id {rule.id!r}")
        if rule.triple in self._active_by_triple:
            raise DuplicateRuleError(
                f"an active rule already exists for "
                f"{rule.l_word.display()} / {rule.headword} sense {rule.sense_id}")
        self._rules[rule.id] = _Stored(rule=rule)
        self._active_by_triple[rule.triple] = rule.id

    def _mark_deleted(self, rule_id: str, annotator: str, when: dt.datetime) -> None:
        stored = self._rules.get(rule_id)
        if stored is None or not stored.active:
            raise NotFoundError(f"no active rule with id {rule_id!r}")
        stored.active = False
        stored.deleted_by = annotator
        stored.deleted_at = when
        del self._active_by_triple[stored.rule.triple]

    # -- CRUD ------------------------------------------------------------

    def create_rule(self, l_word: LWord, headword: str, sense_id: int,
                    roles, comment: Optional[str] = None,
                    annotator: str = "") -> YogyataRule:
        roles = frozenset(KarakaRole.parse(r) if isinstance(r, str) else r
                          for r in roles)
        rule = YogyataRule(
            id=uuid.uuid4().hex,
            l_word=l_word,
            headword=headword,
            sense_id=int(sense_id),
            roles=roles,
            comment=comment,
            annotator=annotator,
            created_at=dt.datetime.now(dt.timezone.utc),
        )
        validate_rule(rule, self.lexicon)
        with self._lock:
            self._install(rule)
            self._append({"op": "create", "rule": rule.to_record()})
        return rule

    def delete_rule(self, rule_id: str, annotator: str = "") -> dict:
        when = dt.datetime.now(dt.timezone.utc)
        with self._lock:
            self._mark_deleted(rule_id, annotator, when)
            self._append({"op": "delete", "id": rule_id, "annotator": annotator,
                          "deleted_at": when.isoformat()})
        return {"deleted": rule_id}

    def get_rule(self, rule_id: str) -> YogyataRule:
        with self._lock:
            stored = self._rules.get(rule_id)
            if stored is None or not stored.active:
                raise NotFoundError(f"no active rule with id {rule_id!r}")
            return stored.rule

    def get_rules(self, l_word: Optional[LWord | str] = None,
                  headword: Optional[str] = None) -> list[YogyataRule]:
        """Active rules matching both filters, ordered by creation time.

        An LWord filter matches on the exact (prefix, dhatu, sandhi_form)
        key; a bare string matches any L-word with that sandhi form, which
        is how clients address L-words when they only know the surface.
        """
        with self._lock:
            rules = [s.rule for s in self._rules.values() if s.active]
        if isinstance(l_word, str):
            rules = [r for r in rules if r.l_word.sandhi_form == l_word]
        elif l_word is not None:
            rules = [r for r in rules if r.l_word.key == l_word.key]
        if headword is not None:
            rules = [r for r in rules if r.headword == headword]
        rules.sort(key=lambda r: (r.created_at, r.id))
        return rules

    def find_active(self, l_word: LWord, headword: str, sense_id: int) -> Optional[YogyataRule]:
        triple = (*l_word.key, headword, sense_id)
        with self._lock:
            rule_id = self._active_by_triple.get(triple)
            return self._rules[rule_id].rule if rule_id else None

    # -- query views -----------------------------------------------------

    def relations_for_lexeme(self, headword: str) -> dict[LWord, dict[int, frozenset[KarakaRole]]]:
        """All karaka relations recorded for one lexeme, keyed by L-word."""
        self.lexicon.get_lexeme(headword)
        out: dict[LWord, dict[int, frozenset[KarakaRole]]] = {}
        for rule in self.get_rules(headword=headword):
            bare = replace(rule.l_word, changed_artha=None)
            out.setdefault(bare, {})[rule.sense_id] = rule.roles
        return dict(sorted(out.items(),
                           key=lambda kv: (kv[0].sandhi_form, kv[0].prefix or "")))

    def dhatus_for_karaka(self, role: KarakaRole) -> list[LWord]:
        """Distinct L-words with at least one rule granting the given role."""
        seen: dict[tuple, LWord] = {}
        for rule in self.get_rules():
            if role in rule.roles:
                bare = replace(rule.l_word, changed_artha=None)
                seen.setdefault(bare.key, bare)
        return sorted(seen.values(), key=lambda lw: (lw.sandhi_form, lw.prefix or ""))

    # -- export / import -------------------------------------------------

    def export_rules(self) -> str:
        """Deterministic JSONL export of the active rules."""
        lines = []
        for rule in self.get_rules():
            record = rule.to_record()
            ordered = {k: record[k] for k in EXPORT_FIELDS}
            lines.append(json.dumps(ordered, ensure_ascii=False))
        return "\n".join(lines) + ("\n" if lines else "")

    def import_rules(self, document: str) -> int:
        """All-or-nothing import of an export document; returns the count."""
        parsed: list[YogyataRule] = []
        for lineno, line in enumerate(document.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"rule import line {lineno}: {exc.msg}") from exc
            parsed.append(rule_from_record(record, self.lexicon))
        with self._lock:
            triples = set(self._active_by_triple)
            ids = set(self._rules)
            for rule in parsed:
                if rule.id in ids:
                    raise ValidationError(f"import: rule id {rule.id!r} already present")
                if rule.triple in triples:
                    raise DuplicateRuleError(
                        f"import: active rule already exists for "
                        f"{rule.l_word.display()} / {rule.headword} sense {rule.sense_id}")
                ids.add(rule.id)
                triples.add(rule.triple)
            for rule in parsed:
                self._install(rule)
                self._append({"op": "create", "rule": rule.to_record()})
        return len(parsed)
