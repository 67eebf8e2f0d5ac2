"""Seed inventories and the deterministic data-directory writer.

Everything the engine needs to reproduce the worked examples lives here in
code: the semantic tag taxonomy, a root inventory grouped by semantic
class, a sense-tagged starter lexicon, the upasarga list, six annotated
rules for kaṃsa, a development login account, and two ready-made sentence
documents. ``write_seed`` materializes all of it into a data directory;
running it twice produces byte-identical files.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
from pathlib import Path

from .jsonio import canonical_dumps
from .lexicon import (
    Lexicon,
    load_dhatus,
    load_lexemes,
    load_prefixes,
    serialize_dhatus,
    serialize_lexemes,
    serialize_prefixes,
)
from .ontology import Ontology, load_ontology, serialize_ontology

# ---------------------------------------------------------------------------
# Semantic tag taxonomy (a DAG: tags may carry several parents)
# ---------------------------------------------------------------------------

ONTOLOGY_TAGS = [
    # id, label, parents, description
    ("padartha", "padārtha", [], "anything nameable; the taxonomy root"),
    ("dravya", "dravya", ["padartha"], "substance; bearer of qualities and actions"),
    ("guna", "guṇa", ["padartha"], "quality; needs a substance as locus"),
    ("kriya", "kriyā", ["padartha"], "action"),
    ("cala", "cala", ["dravya"], "movable substance"),
    ("acala", "acala", ["dravya"], "immovable substance"),
    ("sajiva", "sajīva", ["dravya"], "living substance"),
    ("nirjiva", "nirjīva", ["dravya"], "non-living substance"),
    ("cetana", "cetana", ["sajiva"], "sentient being"),
    ("cala-sajiva", "cala-sajīva", ["cala", "cetana"],
     "movable sentient being (people, animals, birds)"),
    ("acala-sajiva", "acala-sajīva", ["acala", "sajiva"],
     "living but fixed in place (plants)"),
    ("cala-nirjiva", "cala-nirjīva", ["cala", "nirjiva"],
     "movable non-living thing"),
    ("acala-nirjiva", "acala-nirjīva", ["acala", "nirjiva"],
     "immovable non-living thing"),
    ("gamana-sadhana", "gamana-sādhana", ["nirjiva"],
     "means of going; licenses agency of motion roots"),
    ("teja-prthvi-samyukta", "teja:pṛthvī-saṃyukta", ["nirjiva"],
     "compound of fire and earth elements (metals and the like)"),
    ("bhayahetu", "bhayahetu", ["padartha"], "cause of fear"),
    ("manushya", "manuṣya", ["cala-sajiva"], "human being"),
    ("pashu", "paśu", ["cala-sajiva"], "animal"),
    ("pakshin", "pakṣin", ["cala-sajiva"], "bird"),
    ("vanaspati", "vanaspati", ["acala-sajiva"], "plant or tree"),
    ("sthana", "sthāna", ["acala-nirjiva"], "place or site"),
    ("ayudha", "āyudha", ["nirjiva"], "weapon"),
    ("prthvi", "pṛthvī", ["nirjiva"], "earth element"),
    ("ap", "ap", ["nirjiva"], "water element"),
    ("teja", "tejas", ["nirjiva"], "fire element"),
    ("vayu", "vāyu", ["nirjiva"], "air element"),
    ("sparsha", "sparśa", ["guna"], "touch quality (hot, cold, rough)"),
    ("varna", "varṇa", ["guna"], "colour quality"),
    ("rasa", "rasa", ["guna"], "taste quality"),
]

# ---------------------------------------------------------------------------
# Root inventory, grouped by semantic class
# ---------------------------------------------------------------------------

_GATI_EXPECTANCY = ["karta", "karma", "apadana", "adhikarana"]
_GATI_REQS = {"karta": ["cala", "gamana-sadhana"]}
_GATI_PROV = "dhruvamapāye apādānam (aṣṭā. 1.4.24)"
_BHAYA_PROV = "bhītrārthānām bhayahetuḥ (aṣṭā. 1.4.25)"
_KUTSA_PROV = "jugupsāvirāmapramādārthānām upasaṅkhyānam (vārttika on aṣṭā. 1.4.24)"

DHATUS = [
    {"root": "gam", "artha": "to go", "semantic_class": "gati",
     "expectancy": _GATI_EXPECTANCY, "role_requirements": _GATI_REQS,
     "provenance": _GATI_PROV},
    {"root": "agi", "artha": "to go", "semantic_class": "gati",
     "expectancy": _GATI_EXPECTANCY, "role_requirements": _GATI_REQS,
     "provenance": _GATI_PROV},
    {"root": "añcu", "artha": "to go, to worship", "semantic_class": "gati",
     "expectancy": ["karta", "karma", "karana", "sampradana", "apadana", "adhikarana"],
     "role_requirements": _GATI_REQS, "provenance": _GATI_PROV},
    {"root": "iṅ", "artha": "to go, to study", "semantic_class": "gati",
     "expectancy": _GATI_EXPECTANCY, "role_requirements": _GATI_REQS,
     "provenance": _GATI_PROV},
    {"root": "patḷṛ", "artha": "to fall, to fly", "semantic_class": "gati",
     "expectancy": _GATI_EXPECTANCY, "role_requirements": _GATI_REQS,
     "provenance": _GATI_PROV},
    {"root": "ñibhī", "artha": "to fear", "semantic_class": "bhaya",
     "expectancy": ["karta", "apadana", "adhikarana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _BHAYA_PROV},
    {"root": "ḍṛ", "artha": "to fear, to respect", "semantic_class": "bhaya",
     "expectancy": ["karta", "apadana", "adhikarana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _BHAYA_PROV},
    {"root": "bhyas", "artha": "to fear", "semantic_class": "bhaya",
     "expectancy": ["karta", "apadana", "adhikarana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _BHAYA_PROV},
    {"root": "bheṣṭ", "artha": "to fear", "semantic_class": "bhaya",
     "expectancy": ["karta", "apadana", "adhikarana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _BHAYA_PROV, "unverified": True},
    {"root": "gupu", "artha": "to protect", "semantic_class": "raksana",
     "expectancy": ["karta", "karma", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["cala-sajiva"]},
     "provenance": _BHAYA_PROV},
    {"root": "pā", "artha": "to protect", "semantic_class": "raksana",
     "expectancy": ["karta", "karma", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["cala-sajiva"]},
     "provenance": _BHAYA_PROV},
    {"root": "deṅ", "artha": "to protect", "semantic_class": "raksana",
     "expectancy": ["karta", "karma", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["cala-sajiva"]},
     "provenance": _BHAYA_PROV},
    {"root": "rakṣa", "artha": "to protect", "semantic_class": "raksana",
     "expectancy": ["karta", "karma", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["cala-sajiva"]},
     "provenance": _BHAYA_PROV},
    {"root": "drā", "artha": "to despise", "semantic_class": "kutsa",
     "expectancy": ["karta", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _KUTSA_PROV},
    {"root": "garha", "artha": "to censure", "semantic_class": "kutsa",
     "expectancy": ["karta", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _KUTSA_PROV},
    {"root": "roḍṛ", "artha": "to disregard", "semantic_class": "anadara",
     "expectancy": ["karta", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _KUTSA_PROV, "unverified": True},
    {"root": "śīṭa", "artha": "to disregard", "semantic_class": "anadara",
     "expectancy": ["karta", "apadana"],
     "role_requirements": {"karta": ["cetana"], "apadana": ["dravya"]},
     "provenance": _KUTSA_PROV, "unverified": True},
    {"root": "spṛś", "artha": "to touch", "semantic_class": "sparsha",
     "expectancy": ["karta", "karma"],
     "role_requirements": {"karta": ["cetana"]},
     "provenance": None},
]

# ---------------------------------------------------------------------------
# Starter lexicon: sense-tagged dictionary words
# ---------------------------------------------------------------------------

LEXEMES = [
    ("kaṃsa", [("Vessel made up of metal", "teja-prthvi-samyukta"),
               ("King of Mathura", "cala-sajiva")]),
    ("kaṭaka", [("bracelet", "teja-prthvi-samyukta"),
                ("army camp", "sthana")]),
    ("kanaka", [("gold", "teja-prthvi-samyukta")]),
    ("kanduka", [("ball for playing", "cala-nirjiva")]),
    ("kandara", [("cave", "sthana")]),
    ("kanyā", [("girl, maiden", "manushya")]),
    ("kapi", [("monkey", "pashu")]),
    ("kapota", [("pigeon", "pakshin")]),
    ("kamala", [("lotus", "vanaspati")]),
    ("karabha", [("young camel", "pashu")]),
    ("karin", [("elephant", "pashu")]),
    ("karṇīratha", [("litter, palanquin", "gamana-sadhana")]),
    ("kalaśa", [("water pot", "acala-nirjiva")]),
    ("kavi", [("poet", "manushya")]),
    ("kāka", [("crow", "pakshin")]),
    ("kānana", [("forest, grove", "acala-nirjiva")]),
    ("kāṣṭha", [("piece of wood", "acala-nirjiva")]),
    ("kuṭī", [("hut", "sthana")]),
    ("kuñjara", [("elephant", "pashu")]),
    ("kumbha", [("pitcher", "acala-nirjiva")]),
    ("kuliśa", [("thunderbolt, axe", "ayudha")]),
    ("kuśala", [("skill, welfare", "guna")]),
    ("kūpa", [("well", "sthana")]),
    ("kūla", [("river bank", "sthana")]),
    ("kṛṣaka", [("farmer", "manushya")]),
    ("kṛṣṇa", [("black colour", "varna"),
               ("Kṛṣṇa, son of Devakī", "manushya")]),
    ("kesarin", [("lion", "pashu")]),
    ("ghaṭa", [("clay pot", "acala-nirjiva")]),
    ("yāna", [("vehicle", "gamana-sadhana")]),
    ("vana", [("forest", "acala-nirjiva")]),
    ("śīta", [("cold to the touch", "sparsha")]),
]

PREFIXES = [
    "ati", "adhi", "anu", "apa", "api", "abhi", "ava", "ā", "ud", "upa",
    "dus", "dur", "ni", "nis", "nir", "parā", "pari", "pra", "prati",
    "vi", "sam", "su",
]

# ---------------------------------------------------------------------------
# Annotated rules: the six kaṃsa pairings
# ---------------------------------------------------------------------------

_SEED_EPOCH = dt.datetime(2020, 12, 1, tzinfo=dt.timezone.utc)

SEED_RULES = [
    {"id": "r0001", "dhatu": "añcu", "headword": "kaṃsa", "sense_id": 1,
     "roles": ["karma", "sampradana"],
     "comment": "one goes to a vessel, or carries something to it"},
    {"id": "r0002", "dhatu": "añcu", "headword": "kaṃsa", "sense_id": 2,
     "roles": ["karta", "karma", "karana"],
     "comment": "the king goes, is approached, or is the instrument"},
    {"id": "r0003", "dhatu": "ñibhī", "headword": "kaṃsa", "sense_id": 1,
     "roles": ["apadana"],
     "comment": "one can only fear from a vessel"},
    {"id": "r0004", "dhatu": "ñibhī", "headword": "kaṃsa", "sense_id": 2,
     "roles": ["karta", "apadana"],
     "comment": "the king fears, or is feared"},
    {"id": "r0005", "dhatu": "pā", "headword": "kaṃsa", "sense_id": 1,
     "roles": ["karma"],
     "comment": "a vessel gets protected"},
    {"id": "r0006", "dhatu": "pā", "headword": "kaṃsa", "sense_id": 2,
     "roles": ["karta", "apadana"],
     "comment": "the king protects, or others are protected from him"},
]


def seed_rule_records() -> list[dict]:
    """Full export-shaped records for the seed rules, timestamps included."""
    records = []
    for offset, rule in enumerate(SEED_RULES):
        created = _SEED_EPOCH + dt.timedelta(seconds=offset)
        records.append({
            "id": rule["id"],
            "prefix": None,
            "dhatu": rule["dhatu"],
            "sandhi_form": rule["dhatu"],
            "changed_artha": None,
            "headword": rule["headword"],
            "sense_id": rule["sense_id"],
            "roles": list(rule["roles"]),
            "comment": rule["comment"],
            "annotator": "seed",
            "created_at": created.isoformat(),
        })
    return records


# ---------------------------------------------------------------------------
# Development login account
# ---------------------------------------------------------------------------

DEV_ANNOTATOR = "annotator1"
DEV_PASSWORD = "yogyata-dev"
_DEV_SALT = "e1a6c8d34b29f075"
_PBKDF2_ITERATIONS = 60000


def _account_record(annotator: str, password: str, salt_hex: str) -> dict:
    digest = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), bytes.fromhex(salt_hex),
        _PBKDF2_ITERATIONS)
    return {
        "annotator": annotator,
        "algorithm": "pbkdf2_sha256",
        "iterations": _PBKDF2_ITERATIONS,
        "salt": salt_hex,
        "hash": digest.hex(),
    }


# ---------------------------------------------------------------------------
# Ready-made sentence documents
# ---------------------------------------------------------------------------

SENTENCE_YANA = {
    "tokens": [
        {"surface": "yānam",
         "readings": [
             {"kind": "nominal", "stem": "yāna", "gender": "n", "case": 1, "number": "sg"},
             {"kind": "nominal", "stem": "yāna", "gender": "n", "case": 2, "number": "sg"},
         ]},
        {"surface": "vanam",
         "readings": [
             {"kind": "nominal", "stem": "vana", "gender": "n", "case": 1, "number": "sg"},
             {"kind": "nominal", "stem": "vana", "gender": "n", "case": 2, "number": "sg"},
         ]},
        {"surface": "gacchati",
         "readings": [
             {"kind": "verbal", "root": "gam", "person": 3, "lakara": "laṭ", "number": "sg"},
             {"kind": "participle", "stem": "gacchat", "gender": "m", "case": 7, "number": "sg"},
         ]},
    ]
}

SENTENCE_SHITA = {
    "tokens": [
        {"surface": "śītam",
         "readings": [
             {"kind": "nominal", "stem": "śīta", "gender": "n", "case": 1, "number": "sg"},
             {"kind": "nominal", "stem": "śīta", "gender": "n", "case": 2, "number": "sg"},
         ]},
        {"surface": "ghaṭam",
         "readings": [
             {"kind": "nominal", "stem": "ghaṭa", "gender": "n", "case": 1, "number": "sg"},
             {"kind": "nominal", "stem": "ghaṭa", "gender": "n", "case": 2, "number": "sg"},
         ]},
        {"surface": "spṛśati",
         "readings": [
             {"kind": "verbal", "root": "spṛś", "person": 3, "lakara": "laṭ", "number": "sg"},
         ]},
    ]
}


# ---------------------------------------------------------------------------
# Builders and the writer
# ---------------------------------------------------------------------------


def ontology_document() -> dict:
    return {"tags": [
        {"id": tag_id, "label": label, "parents": list(parents), "description": desc}
        for tag_id, label, parents, desc in ONTOLOGY_TAGS
    ]}


def dhatus_document() -> dict:
    records = []
    for entry in DHATUS:
        record = dict(entry)
        record.setdefault("unverified", False)
        records.append(record)
    return {"dhatus": records}


def lexemes_document() -> dict:
    return {"lexemes": [
        {"headword": headword,
         "senses": [{"sense_id": i, "gloss": gloss, "tag": tag}
                    for i, (gloss, tag) in enumerate(senses, start=1)]}
        for headword, senses in LEXEMES
    ]}


def seed_ontology() -> Ontology:
    return load_ontology(canonical_dumps(ontology_document()))


def seed_lexicon(ontology: Ontology | None = None) -> Lexicon:
    ontology = ontology or seed_ontology()
    dhatus = load_dhatus(canonical_dumps(dhatus_document()), ontology)
    lexemes = load_lexemes(canonical_dumps(lexemes_document()), ontology)
    prefixes = load_prefixes(canonical_dumps({"prefixes": PREFIXES}))
    return Lexicon(ontology, dhatus, lexemes, prefixes)


def write_seed(data_dir) -> dict[str, int]:
    """(Re)write the full seed data directory; returns per-file counts."""
    data_dir = Path(data_dir)
    data_dir.mkdir(parents=True, exist_ok=True)
    (data_dir / "examples").mkdir(exist_ok=True)

    ontology = seed_ontology()
    lexicon = seed_lexicon(ontology)

    (data_dir / "ontology.json").write_text(
        serialize_ontology(ontology), encoding="utf-8")
    (data_dir / "dhatus.json").write_text(
        serialize_dhatus({d.root: d for d in map(lexicon.get_dhatu, lexicon.dhatu_roots())}),
        encoding="utf-8")
    (data_dir / "lexicon.json").write_text(
        serialize_lexemes({h: lexicon.get_lexeme(h) for h in lexicon.headwords()}),
        encoding="utf-8")
    (data_dir / "prefixes.json").write_text(
        serialize_prefixes(lexicon.prefixes), encoding="utf-8")

    journal_lines = [
        json.dumps({"op": "create", "rule": record}, ensure_ascii=False)
        for record in seed_rule_records()
    ]
    (data_dir / "rules.jsonl").write_text(
        "\n".join(journal_lines) + "\n", encoding="utf-8")

    accounts = {"accounts": [_account_record(DEV_ANNOTATOR, DEV_PASSWORD, _DEV_SALT)]}
    (data_dir / "accounts.json").write_text(
        canonical_dumps(accounts), encoding="utf-8")

    (data_dir / "examples" / "sentence_yana.json").write_text(
        canonical_dumps(SENTENCE_YANA), encoding="utf-8")
    (data_dir / "examples" / "sentence_shita.json").write_text(
        canonical_dumps(SENTENCE_SHITA), encoding="utf-8")

    return {
        "tags": len(ONTOLOGY_TAGS),
        "dhatus": len(DHATUS),
        "lexemes": len(LEXEMES),
        "prefixes": len(PREFIXES),
        "rules": len(SEED_RULES),
        "accounts": 1,
        "examples": 2,
    }
