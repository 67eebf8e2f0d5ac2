"""Shared fixtures: seed data in memory, a seeded data directory on disk,
and a random-sentence generator for the property suites."""

from __future__ import annotations

import json
import random

import pytest

from yogyata.analyzer import Analyzer, Nominal, Participle, SentenceInput, Token, Verbal
from yogyata.rulestore import RuleStore
from yogyata.seeds import (
    SENTENCE_SHITA,
    SENTENCE_YANA,
    seed_lexicon,
    seed_ontology,
    seed_rule_records,
    write_seed,
)
from yogyata.analyzer import sentence_from_document


@pytest.fixture(scope="session")
def ontology():
    return seed_ontology()


@pytest.fixture(scope="session")
def lexicon(ontology):
    return seed_lexicon(ontology)


@pytest.fixture
def empty_store(lexicon, tmp_path):
    return RuleStore(lexicon, tmp_path / "rules.jsonl")


@pytest.fixture
def seeded_store(lexicon, tmp_path):
    store = RuleStore(lexicon, tmp_path / "rules.jsonl")
    document = "\n".join(json.dumps(r, ensure_ascii=False)
                         for r in seed_rule_records()) + "\n"
    store.import_rules(document)
    return store


@pytest.fixture
def analyzer(lexicon):
    """Analyzer without a rule store: constraint checks only."""
    return Analyzer(lexicon)


@pytest.fixture
def ruled_analyzer(lexicon, seeded_store):
    return Analyzer(lexicon, seeded_store)


@pytest.fixture
def data_dir(tmp_path):
    target = tmp_path / "data"
    write_seed(target)
    return target


@pytest.fixture
def golden_yana():
    return sentence_from_document(SENTENCE_YANA)


@pytest.fixture
def golden_shita():
    return sentence_from_document(SENTENCE_SHITA)


# ---------------------------------------------------------------------------
# Random sentences over the seed lexicon
# ---------------------------------------------------------------------------

#: Stems drawn for random nominal readings; all resolve in the seed lexicon.
STEM_POOL = (
    "ghaṭa", "yāna", "vana", "śīta", "kaṃsa", "kapi", "kūpa",
    "kamala", "kesarin", "kānana", "kuliśa",
)

ROOT_POOL = ("gam", "spṛś", "ñibhī", "pā", "drā", "añcu", "rakṣa")


def random_nominal(rng: random.Random, stem: str | None = None) -> Nominal:
    return Nominal(
        stem=stem or rng.choice(STEM_POOL),
        gender=rng.choice(("m", "f", "n")),
        case=rng.randint(1, 7),
        number=rng.choice(("sg", "du", "pl")),
    )


def random_sentence(rng: random.Random) -> SentenceInput:
    """1-3 nominal tokens with 1-2 readings each, plus one verbal token.

    Half the time all nominal readings of one token share a stem, which
    is the common shape for real morphological output; the rest mix
    stems to stress the sense bookkeeping.
    """
    tokens = []
    for i in range(rng.randint(1, 3)):
        stem = rng.choice(STEM_POOL) if rng.random() < 0.5 else None
        readings = tuple(random_nominal(rng, stem)
                         for _ in range(rng.randint(1, 2)))
        token = Token(surface=f"pada{i}", readings=readings)
        tokens.append(token)
    root = rng.choice(ROOT_POOL)
    verb_readings: list = [Verbal(root=root, person=3, lakara="laṭ", number="sg")]
    if rng.random() < 0.3:
        verb_readings.append(Participle(stem=root, gender="m", case=7, number="sg"))
    tokens.append(Token(surface="kriyāpada", readings=tuple(verb_readings)))
    if rng.random() < 0.25:
        hinted = rng.choice(tokens[:-1])
        nominal = hinted.readings[0]
        tokens[tokens.index(hinted)] = Token(
            surface=hinted.surface, readings=hinted.readings,
            sense_hints={nominal.stem: 1})
    return SentenceInput(tokens=tuple(tokens))


def random_corpus(seed: int, size: int) -> list[SentenceInput]:
    rng = random.Random(seed)
    return [random_sentence(rng) for _ in range(size)]
