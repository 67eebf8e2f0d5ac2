"""Constraint-based role analysis over supplied morphological readings.

The pipeline: nominal case readings suggest candidate karaka roles
(``case_to_roles``); candidates are spelled out either as individual
statements (``enumerate_hypotheses``) or as total sentence analyses
(``enumerate_analyses``); both get filtered by the verbal root's expectancy,
by annotated yogyata rules when present, and by ontological role
requirements otherwise (``prune``); ``disambiguate`` ranks what survives.

Every decision carries a justification so callers can show *why* a reading
was kept or discarded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    AnalysisError,
    NoAnalysisError,
    NotFoundError,
    ParseError,
    RangeError,
    UnknownLexemeError,
    ValidationError,
)
from .jsonio import loads
from .lexicon import DhatuEntry, KarakaRole, Lexicon, LWord, role_ids, sort_roles

GENDERS = ("m", "f", "n")
NUMBERS = ("sg", "du", "pl")

PERMISSIVE = "permissive"
STRICT = "strict"
MODES = (PERMISSIVE, STRICT)

#: Active-voice defaults: which roles a case suffix may signal.
DEFAULT_CASE_TABLE: Mapping[int, tuple[KarakaRole, ...]] = {
    1: (KarakaRole.KARTA,),
    2: (KarakaRole.KARMA,),
    3: (KarakaRole.KARANA,),
    4: (KarakaRole.SAMPRADANA,),
    5: (KarakaRole.APADANA,),
    6: (),
    7: (KarakaRole.ADHIKARANA,),
}


def case_to_roles(case: int, table: Optional[Mapping[int, Sequence[KarakaRole]]] = None) -> frozenset[KarakaRole]:
    """Candidate roles for a case suffix; case 6 maps to none."""
    table = DEFAULT_CASE_TABLE if table is None else table
    if case not in table:
        lo, hi = min(table), max(table)
        raise RangeError(f"case {case} outside supported range {lo}..{hi}")
    return frozenset(table[case])


def _ordered_roles(case: int, table) -> tuple[KarakaRole, ...]:
    if case not in table:
        lo, hi = min(table), max(table)
        raise RangeError(f"case {case} outside supported range {lo}..{hi}")
    return tuple(table[case])


# ---------------------------------------------------------------------------
# Readings and sentences
# ---------------------------------------------------------------------------


def _check_member(value, allowed, what):
    if value not in allowed:
        raise ValidationError(f"{what} must be one of {list(allowed)}, got {value!r}")


@dataclass(frozen=True)
class Nominal:
    stem: str
    gender: str
    case: int
    number: str

    def __post_init__(self):
        if not self.stem:
            raise ValidationError("nominal reading: empty stem")
        _check_member(self.gender, GENDERS, "gender")
        _check_member(self.number, NUMBERS, "number")
        if not isinstance(self.case, int) or not 1 <= self.case <= 7:
            raise ValidationError(f"case must lie in 1..7, got {self.case!r}")


@dataclass(frozen=True)
class Verbal:
    root: str
    person: int
    lakara: str
    number: str

    def __post_init__(self):
        if not self.root:
            raise ValidationError("verbal reading: empty root")
        _check_member(self.person, (1, 2, 3), "person")
        _check_member(self.number, NUMBERS, "number")


@dataclass(frozen=True)
class Participle:
    """Accepted in input for completeness; generates no role hypotheses."""

    stem: str
    gender: str
    case: int
    number: str

    def __post_init__(self):
        if not self.stem:
            raise ValidationError("participle reading: empty stem")
        _check_member(self.gender, GENDERS, "gender")
        _check_member(self.number, NUMBERS, "number")
        if not isinstance(self.case, int) or not 1 <= self.case <= 7:
            raise ValidationError(f"case must lie in 1..7, got {self.case!r}")


MorphReading = Union[Nominal, Verbal, Participle]


@dataclass(frozen=True)
class Token:
    surface: str
    readings: tuple[MorphReading, ...]
    sense_hints: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.readings:
            raise ValidationError(f"token {self.surface!r} has no readings")
        deduped = tuple(dict.fromkeys(self.readings))
        object.__setattr__(self, "readings", deduped)

    def nominal_readings(self) -> tuple[Nominal, ...]:
        return tuple(r for r in self.readings if isinstance(r, Nominal))

    def verbal_readings(self) -> tuple[Verbal, ...]:
        return tuple(r for r in self.readings if isinstance(r, Verbal))


@dataclass(frozen=True)
class SentenceInput:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not self.tokens:
            raise AnalysisError("sentence has no tokens")
        if not any(tok.verbal_readings() for tok in self.tokens):
            raise AnalysisError("sentence has no verbal reading")

    def merged_sense_hints(self) -> dict[str, int]:
        hints: dict[str, int] = {}
        for tok in self.tokens:
            for stem, sense_id in tok.sense_hints.items():
                if stem in hints and hints[stem] != sense_id:
                    raise ValidationError(
                        f"conflicting sense hints for {stem!r}: "
                        f"{hints[stem]} vs {sense_id}")
                hints[stem] = int(sense_id)
        return hints


def agreement(a, b) -> bool:
    return a.case == b.case and a.gender == b.gender and a.number == b.number


def _agreement_failure(a, b) -> str:
    for name in ("case", "gender", "number"):
        va, vb = getattr(a, name), getattr(b, name)
        if va != vb:
            return f"{name} mismatch: {va} vs {vb}"
    return "no mismatch"


# ---------------------------------------------------------------------------
# Labels, statements, analyses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Karaka:
    role: KarakaRole


@dataclass(frozen=True)
class Visheshana:
    head: int


@dataclass(frozen=True)
class RoleHypothesis:
    token: int
    reading: Nominal
    label: Union[Karaka, Visheshana]

    def __post_init__(self):
        if not isinstance(self.reading, Nominal):
            raise ValidationError("role hypotheses arise only from nominal readings")
        if isinstance(self.label, Visheshana) and self.label.head == self.token:
            raise ValidationError("a token cannot qualify itself")


@dataclass(frozen=True)
class Statement:
    """One enumerated claim: a lone karaka item, or head-role plus qualifier."""

    parts: tuple[RoleHypothesis, ...]

    def __post_init__(self):
        if not 1 <= len(self.parts) <= 2:
            raise ValidationError("a statement holds one or two parts")

    def part_for_token(self, token: int) -> Optional[RoleHypothesis]:
        for part in self.parts:
            if part.token == token:
                return part
        return None


@dataclass(frozen=True)
class FullAnalysis:
    verb_token: int
    verb: Verbal
    labels: tuple[RoleHypothesis, ...]
    unfilled: frozenset[KarakaRole]

    def __post_init__(self):
        by_token = {}
        roles_seen = set()
        for hyp in self.labels:
            if hyp.token == self.verb_token:
                raise ValidationError("the verb token cannot carry a label")
            if hyp.token in by_token:
                raise ValidationError(f"token {hyp.token} labeled twice")
            by_token[hyp.token] = hyp
            if isinstance(hyp.label, Karaka):
                if hyp.label.role in roles_seen:
                    raise ValidationError(
                        f"role {hyp.label.role.value} filled by two tokens")
                roles_seen.add(hyp.label.role)
        for hyp in self.labels:
            if isinstance(hyp.label, Visheshana):
                head = by_token.get(hyp.label.head)
                if head is None:
                    raise ValidationError(
                        f"qualifier head token {hyp.label.head} is unlabeled")
                if not isinstance(head.label, Karaka):
                    raise ValidationError(
                        "qualifier heads must themselves carry a karaka label")

    def label_for(self, token: int) -> Optional[RoleHypothesis]:
        for hyp in self.labels:
            if hyp.token == token:
                return hyp
        return None

    def filled_roles(self) -> frozenset[KarakaRole]:
        return frozenset(h.label.role for h in self.labels
                         if isinstance(h.label, Karaka))


# ---------------------------------------------------------------------------
# Justifications and reports
# ---------------------------------------------------------------------------

RULE = "rule"
CONSTRAINT = "constraint"
AGREEMENT_FAILURE = "agreement-failure"
EXPECTANCY_VIOLATION = "expectancy-violation"

KARAKA_DRAVYA = "karaka-requires-dravya"
VISH_DRAVYA = "visheshana-head-requires-dravya"
UNKNOWN_RETAINED = "unknown-lexeme-retained"
NO_EVIDENCE = "no supporting evidence"
NO_LABELS = "no-labels-to-check"


@dataclass(frozen=True)
class Justification:
    kind: str
    detail: str

    @classmethod
    def rule(cls, rule_id: str) -> "Justification":
        return cls(RULE, rule_id)

    @classmethod
    def constraint(cls, name: str) -> "Justification":
        return cls(CONSTRAINT, name)

    @classmethod
    def agreement(cls, detail: str) -> "Justification":
        return cls(AGREEMENT_FAILURE, detail)

    @classmethod
    def expectancy(cls, detail: str) -> "Justification":
        return cls(EXPECTANCY_VIOLATION, detail)


@dataclass(frozen=True)
class PruneDecision:
    item: object
    justification: Justification


@dataclass(frozen=True)
class PruneReport:
    mode: str
    surviving: tuple
    support: tuple[PruneDecision, ...]
    pruned: tuple[PruneDecision, ...]


@dataclass(frozen=True)
class ResolvedAnalysis:
    """A surviving analysis plus the sense choice that let it survive."""

    analysis: FullAnalysis
    senses: tuple[tuple[str, int], ...]
    rule_backed: int
    analysis_index: int
    trajectory_index: int

    def sense_map(self) -> dict[str, int]:
        return dict(self.senses)


# ---------------------------------------------------------------------------
# The analyzer
# ---------------------------------------------------------------------------


class Analyzer:
    """Pure functions over a loaded lexicon and an optional rule store."""

    def __init__(self, lexicon: Lexicon, rulestore=None,
                 case_table: Optional[Mapping[int, Sequence[KarakaRole]]] = None):
        self.lexicon = lexicon
        self.rulestore = rulestore
        self.case_table = dict(DEFAULT_CASE_TABLE if case_table is None else case_table)

    def case_to_roles(self, case: int) -> frozenset[KarakaRole]:
        return case_to_roles(case, self.case_table)

    # -- enumeration -----------------------------------------------------

    def enumerate_hypotheses(self, sentence: SentenceInput) -> list[Statement]:
        """Candidate statements: lone karaka items first, then qualifier pairs."""
        singles: list[Statement] = []
        for i, tok in enumerate(sentence.tokens):
            readings = sorted(tok.nominal_readings(), key=lambda r: r.case)
            for reading in readings:
                for role in _ordered_roles(reading.case, self.case_table):
                    singles.append(Statement(
                        (RoleHypothesis(i, reading, Karaka(role)),)))
        combined = []
        for head_i, head_tok in enumerate(sentence.tokens):
            for adj_i, adj_tok in enumerate(sentence.tokens):
                if adj_i == head_i:
                    continue
                for hp, head_r in enumerate(head_tok.nominal_readings()):
                    for ap, adj_r in enumerate(adj_tok.nominal_readings()):
                        if not agreement(head_r, adj_r):
                            continue
                        for role in _ordered_roles(head_r.case, self.case_table):
                            key = (head_r.case, role.index, head_i, adj_i, hp, ap)
                            stmt = Statement((
                                RoleHypothesis(head_i, head_r, Karaka(role)),
                                RoleHypothesis(adj_i, adj_r, Visheshana(head_i)),
                            ))
                            combined.append((key, stmt))
        combined.sort(key=lambda kv: kv[0])
        return singles + [stmt for _, stmt in combined]

    def enumerate_analyses(self, sentence: SentenceInput) -> list[FullAnalysis]:
        """All total, consistent labelings, in deterministic search order."""
        verb_choices = [(i, r) for i, tok in enumerate(sentence.tokens)
                        for r in tok.verbal_readings()]
        if not verb_choices:
            raise AnalysisError("sentence has no verbal reading")
        out: list[FullAnalysis] = []
        for verb_token, verb_reading in verb_choices:
            dhatu = self._dhatu_for_root(verb_reading.root)
            others = [i for i in range(len(sentence.tokens)) if i != verb_token]
            candidates = {i: self._label_candidates(sentence, i, others)
                          for i in others}
            self._extend(sentence, verb_token, verb_reading, dhatu,
                         others, candidates, 0, [], set(), out)
        return out

    def _label_candidates(self, sentence, i, others) -> list[RoleHypothesis]:
        cands: list[RoleHypothesis] = []
        for reading in sentence.tokens[i].nominal_readings():
            for role in _ordered_roles(reading.case, self.case_table):
                cands.append(RoleHypothesis(i, reading, Karaka(role)))
            for head in others:
                if head != i:
                    cands.append(RoleHypothesis(i, reading, Visheshana(head)))
        return cands

    def _extend(self, sentence, verb_token, verb_reading, dhatu,
                others, candidates, pos, chosen, used_roles, out):
        if pos == len(others):
            if self._qualifiers_consistent(chosen):
                labels = tuple(chosen)
                filled = frozenset(h.label.role for h in labels
                                   if isinstance(h.label, Karaka))
                out.append(FullAnalysis(
                    verb_token=verb_token,
                    verb=verb_reading,
                    labels=labels,
                    unfilled=frozenset(dhatu.expectancy - filled),
                ))
            return
        for hyp in candidates[others[pos]]:
            if isinstance(hyp.label, Karaka):
                if hyp.label.role in used_roles:
                    continue
                self._extend(sentence, verb_token, verb_reading, dhatu, others,
                             candidates, pos + 1, chosen + [hyp],
                             used_roles | {hyp.label.role}, out)
            else:
                self._extend(sentence, verb_token, verb_reading, dhatu, others,
                             candidates, pos + 1, chosen + [hyp], used_roles, out)

    @staticmethod
    def _qualifiers_consistent(chosen) -> bool:
        by_token = {h.token: h for h in chosen}
        for hyp in chosen:
            if isinstance(hyp.label, Visheshana):
                head = by_token.get(hyp.label.head)
                if head is None or not isinstance(head.label, Karaka):
                    return False
                if not agreement(hyp.reading, head.reading):
                    return False
        return True

    # -- pruning ---------------------------------------------------------

    def prune(self, sentence: SentenceInput, items, mode: str = PERMISSIVE) -> PruneReport:
        """Partition items into survivors and pruned, each with a justification."""
        _check_member(mode, MODES, "mode")
        hints = sentence.merged_sense_hints()
        surviving: list = []
        support: list[PruneDecision] = []
        pruned: list[PruneDecision] = []
        sentence_verb = self._sentence_verb(sentence)
        for item in items:
            if isinstance(item, Statement):
                ok, just = self._prune_statement(item, sentence_verb, hints, mode)
            elif isinstance(item, FullAnalysis):
                trajectories, failure = self._analysis_trajectories(item, hints, mode)
                if trajectories:
                    ok, just = True, trajectories[0].support
                else:
                    ok, just = False, failure
            else:
                raise ValidationError(
                    f"prune accepts statements or analyses, got {type(item).__name__}")
            if ok:
                surviving.append(item)
                support.append(PruneDecision(item, just))
            else:
                pruned.append(PruneDecision(item, just))
        return PruneReport(mode=mode, surviving=tuple(surviving),
                           support=tuple(support), pruned=tuple(pruned))

    def disambiguate(self, sentence: SentenceInput,
                     mode: str = PERMISSIVE) -> tuple[list[ResolvedAnalysis], PruneReport]:
        """Rank surviving analyses; raise NoAnalysisError when none survive."""
        _check_member(mode, MODES, "mode")
        hints = sentence.merged_sense_hints()
        analyses = self.enumerate_analyses(sentence)
        surviving: list = []
        support: list[PruneDecision] = []
        pruned: list[PruneDecision] = []
        resolved: list[ResolvedAnalysis] = []
        for index, analysis in enumerate(analyses):
            trajectories, failure = self._analysis_trajectories(analysis, hints, mode)
            if trajectories:
                surviving.append(analysis)
                support.append(PruneDecision(analysis, trajectories[0].support))
                for traj in trajectories:
                    resolved.append(ResolvedAnalysis(
                        analysis=analysis,
                        senses=traj.senses,
                        rule_backed=traj.rule_backed,
                        analysis_index=index,
                        trajectory_index=traj.index,
                    ))
            else:
                pruned.append(PruneDecision(analysis, failure))
        report = PruneReport(mode=mode, surviving=tuple(surviving),
                             support=tuple(support), pruned=tuple(pruned))
        if not resolved:
            raise NoAnalysisError(report)
        resolved.sort(key=lambda r: (len(r.analysis.unfilled), -r.rule_backed,
                                     r.analysis_index, r.trajectory_index))
        return resolved, report

    # -- claim checking --------------------------------------------------

    def _dhatu_for_root(self, root: str) -> DhatuEntry:
        try:
            return self.lexicon.get_dhatu(root)
        except NotFoundError:
            raise UnknownLexemeError(f"unknown verbal root {root!r}") from None

    def _sentence_verb(self, sentence: SentenceInput) -> tuple[DhatuEntry, LWord]:
        for tok in sentence.tokens:
            for reading in tok.verbal_readings():
                dhatu = self._dhatu_for_root(reading.root)
                return dhatu, self.lexicon.compose_lword(None, reading.root)
        raise AnalysisError("sentence has no verbal reading")

    def _stem_senses(self, stem: str, hints, mode: str) -> Optional[list[int]]:
        """Sense ids to iterate for a stem; None marks an unknown lexeme."""
        if not self.lexicon.has_lexeme(stem):
            if mode == STRICT:
                raise UnknownLexemeError(f"unknown lexeme {stem!r}")
            return None
        lexeme = self.lexicon.get_lexeme(stem)
        if stem in hints:
            sense_id = hints[stem]
            lexeme.sense(sense_id)
            return [sense_id]
        return [s.sense_id for s in lexeme.senses]

    def _check_karaka_claim(self, dhatu: DhatuEntry, l_word: LWord, stem: str,
                            role: KarakaRole, sense_id: Optional[int],
                            mode: str) -> tuple[bool, Justification]:
        if role not in dhatu.expectancy:
            expectancy = ", ".join(r.label for r in sort_roles(dhatu.expectancy))
            return False, Justification.expectancy(
                f"{role.label} not in expectancy of {dhatu.root} {{{expectancy}}}")
        if sense_id is None:
            return True, Justification.constraint(UNKNOWN_RETAINED)
        tag = self.lexicon.get_lexeme(stem).sense(sense_id).tag
        rule = None
        if self.rulestore is not None:
            rule = self.rulestore.find_active(l_word, stem, sense_id)
        if rule is not None:
            return role in rule.roles, Justification.rule(rule.id)
        ontology = self.lexicon.ontology
        if not ontology.under_dravya(tag):
            return False, Justification.constraint(KARAKA_DRAVYA)
        requirement = dhatu.requirement(role)
        if requirement:
            labels = ", ".join(ontology[t].label for t in sorted(requirement))
            name = f"role-requirement: {role.label} of {dhatu.root} requires {{{labels}}}"
            return ontology.compatible(tag, requirement), Justification.constraint(name)
        if mode == STRICT:
            return False, Justification.expectancy(NO_EVIDENCE)
        return True, Justification.constraint(KARAKA_DRAVYA)

    def _check_qualifier_claim(self, head_reading: Nominal, adj_reading: Nominal,
                               head_stem: str, head_sense_id: Optional[int]) -> tuple[bool, Justification]:
        if not agreement(head_reading, adj_reading):
            return False, Justification.agreement(
                _agreement_failure(adj_reading, head_reading))
        if head_sense_id is None:
            return True, Justification.constraint(UNKNOWN_RETAINED)
        tag = self.lexicon.get_lexeme(head_stem).sense(head_sense_id).tag
        if not self.lexicon.ontology.under_dravya(tag):
            return False, Justification.constraint(VISH_DRAVYA)
        return True, Justification.constraint(VISH_DRAVYA)

    def _prune_statement(self, stmt: Statement, sentence_verb,
                         hints, mode: str) -> tuple[bool, Justification]:
        dhatu, l_word = sentence_verb
        stems: list[str] = []
        for part in stmt.parts:
            if isinstance(part.label, Karaka):
                stem = part.reading.stem
            else:
                head = stmt.part_for_token(part.label.head)
                if head is None:
                    raise ValidationError(
                        "qualifier statement lacks its head part")
                stem = head.reading.stem
            if stem not in stems:
                stems.append(stem)
        sense_lists = {s: self._stem_senses(s, hints, mode) for s in stems}
        iterable = [sense_lists[s] if sense_lists[s] is not None else [None]
                    for s in stems]
        first_failure: Optional[Justification] = None
        for combo in itertools.product(*iterable):
            senses = dict(zip(stems, combo))
            ok_all = True
            head_just: Optional[Justification] = None
            for part in stmt.parts:
                if isinstance(part.label, Karaka):
                    ok, just = self._check_karaka_claim(
                        dhatu, l_word, part.reading.stem, part.label.role,
                        senses[part.reading.stem], mode)
                else:
                    head = stmt.part_for_token(part.label.head)
                    ok, just = self._check_qualifier_claim(
                        head.reading, part.reading, head.reading.stem,
                        senses[head.reading.stem])
                if head_just is None:
                    head_just = just
                if not ok:
                    if first_failure is None:
                        first_failure = just
                    ok_all = False
                    break
            if ok_all:
                return True, head_just
        return False, first_failure


    @dataclass(frozen=True)
    class _Trajectory:
        senses: tuple[tuple[str, int], ...]
        rule_backed: int
        index: int
        support: Justification

    def _analysis_trajectories(self, analysis: FullAnalysis, hints,
                               mode: str):
        """Surviving sense choices for one analysis, plus the first failure."""
        dhatu = self._dhatu_for_root(analysis.verb.root)
        l_word = self.lexicon.compose_lword(None, analysis.verb.root)
        stems: list[str] = []
        for hyp in analysis.labels:
            if isinstance(hyp.label, Karaka):
                stem = hyp.reading.stem
            else:
                stem = analysis.label_for(hyp.label.head).reading.stem
            if stem not in stems:
                stems.append(stem)
        sense_lists = {s: self._stem_senses(s, hints, mode) for s in stems}
        iterable = [sense_lists[s] if sense_lists[s] is not None else [None]
                    for s in stems]
        survivors: list[Analyzer._Trajectory] = []
        first_failure: Optional[Justification] = None
        for index, combo in enumerate(itertools.product(*iterable)):
            senses = dict(zip(stems, combo))
            ok_all = True
            rule_backed = 0
            support: Optional[Justification] = None
            for hyp in analysis.labels:
                if isinstance(hyp.label, Karaka):
                    ok, just = self._check_karaka_claim(
                        dhatu, l_word, hyp.reading.stem, hyp.label.role,
                        senses[hyp.reading.stem], mode)
                    if ok and just.kind == RULE:
                        rule_backed += 1
                else:
                    head = analysis.label_for(hyp.label.head)
                    ok, just = self._check_qualifier_claim(
                        head.reading, hyp.reading, head.reading.stem,
                        senses[head.reading.stem])
                if support is None:
                    support = just
                if not ok:
                    if first_failure is None:
                        first_failure = just
                    ok_all = False
                    break
            if ok_all:
                if support is None:
                    support = Justification.constraint(NO_LABELS)
                resolved = tuple(sorted((s, sid) for s, sid in senses.items()
                                        if sid is not None))
                survivors.append(Analyzer._Trajectory(
                    senses=resolved, rule_backed=rule_backed,
                    index=index, support=support))
        return survivors, first_failure


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------


def reading_to_record(reading: MorphReading) -> dict:
    if isinstance(reading, Nominal):
        return {"kind": "nominal", "stem": reading.stem, "gender": reading.gender,
                "case": reading.case, "number": reading.number}
    if isinstance(reading, Verbal):
        return {"kind": "verbal", "root": reading.root, "person": reading.person,
                "lakara": reading.lakara, "number": reading.number}
    return {"kind": "participle", "stem": reading.stem, "gender": reading.gender,
            "case": reading.case, "number": reading.number}


def reading_from_record(record: dict) -> MorphReading:
    if not isinstance(record, dict):
        raise ParseError(f"reading must be an object, got {type(record).__name__}")
    kind = record.get("kind")
    try:
        if kind == "nominal":
            return Nominal(stem=record["stem"], gender=record["gender"],
                           case=int(record["case"]), number=record["number"])
        if kind == "verbal":
            return Verbal(root=record["root"], person=int(record["person"]),
                          lakara=record.get("lakara", ""), number=record["number"])
        if kind == "participle":
            return Participle(stem=record["stem"], gender=record["gender"],
                              case=int(record["case"]), number=record["number"])
    except KeyError as exc:
        raise ParseError(f"{kind} reading: missing field {exc.args[0]!r}") from None
    raise ParseError(f"reading kind must be nominal|verbal|participle, got {kind!r}")


def sentence_to_document(sentence: SentenceInput) -> dict:
    tokens = []
    for tok in sentence.tokens:
        record = {"surface": tok.surface,
                  "readings": [reading_to_record(r) for r in tok.readings]}
        if tok.sense_hints:
            record["sense_hints"] = {s: int(i) for s, i in sorted(tok.sense_hints.items())}
        tokens.append(record)
    return {"tokens": tokens}


def sentence_from_document(doc) -> SentenceInput:
    if not isinstance(doc, dict) or not isinstance(doc.get("tokens"), list):
        raise ParseError("sentence document: expected an object with a 'tokens' list")
    tokens = []
    for i, record in enumerate(doc["tokens"]):
        if not isinstance(record, dict):
            raise ParseError(f"sentence token {i}: expected an object")
        surface = record.get("surface")
        if not surface or not isinstance(surface, str):
            raise ParseError(f"sentence token {i}: missing surface")
        raw_readings = record.get("readings")
        if not isinstance(raw_readings, list) or not raw_readings:
            raise ParseError(f"token {surface!r}: 'readings' must be a non-empty list")
        readings = tuple(reading_from_record(r) for r in raw_readings)
        hints = record.get("sense_hints") or {}
        if not isinstance(hints, dict):
            raise ParseError(f"token {surface!r}: 'sense_hints' must be an object")
        tokens.append(Token(surface=surface, readings=readings,
                            sense_hints={str(k): int(v) for k, v in hints.items()}))
    return SentenceInput(tokens=tuple(tokens))


def sentence_from_json(text: str) -> SentenceInput:
    return sentence_from_document(loads(text, "sentence"))


def label_to_record(label: Union[Karaka, Visheshana]) -> dict:
    if isinstance(label, Karaka):
        return {"kind": "karaka", "role": label.role.value}
    return {"kind": "visheshana", "head": label.head}


def hypothesis_to_record(hyp: RoleHypothesis) -> dict:
    return {"token": hyp.token, "reading": reading_to_record(hyp.reading),
            "label": label_to_record(hyp.label)}


def item_to_record(item) -> dict:
    if isinstance(item, Statement):
        return {"kind": "statement",
                "parts": [hypothesis_to_record(p) for p in item.parts]}
    if isinstance(item, FullAnalysis):
        return {"kind": "analysis",
                "verb": {"token": item.verb_token,
                         "reading": reading_to_record(item.verb)},
                "labels": [hypothesis_to_record(h) for h in item.labels],
                "unfilled": role_ids(item.unfilled)}
    raise ValidationError(f"cannot serialize item of type {type(item).__name__}")


def justification_to_record(just: Justification) -> dict:
    return {"kind": just.kind, "detail": just.detail}


def report_to_document(report: PruneReport) -> dict:
    return {
        "mode": report.mode,
        "surviving": [{"item": item_to_record(d.item),
                       "justification": justification_to_record(d.justification)}
                      for d in report.support],
        "pruned": [{"item": item_to_record(d.item),
                    "justification": justification_to_record(d.justification)}
                   for d in report.pruned],
    }


def resolved_to_record(resolved: ResolvedAnalysis, rank: int) -> dict:
    analysis = resolved.analysis
    return {
        "rank": rank,
        "verb": {"token": analysis.verb_token, "root": analysis.verb.root},
        "labels": [hypothesis_to_record(h) for h in analysis.labels],
        "senses": {stem: sense_id for stem, sense_id in resolved.senses},
        "unfilled": role_ids(analysis.unfilled),
        "rule_backed": resolved.rule_backed,
    }


def disambiguation_to_document(ranked: list[ResolvedAnalysis],
                               report: PruneReport) -> dict:
    return {
        "mode": report.mode,
        "analyses": [resolved_to_record(r, i + 1) for i, r in enumerate(ranked)],
        "report": report_to_document(report),
    }
