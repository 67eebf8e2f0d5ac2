"""Assembles the loaded engine (ontology, lexicon, rule store, analyzer)
from a data directory produced by ``seeds.write_seed`` or by hand."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .analyzer import Analyzer
from .errors import NotFoundError
from .lexicon import Lexicon, load_lexicon_dir
from .ontology import Ontology, load_ontology_file
from .rulestore import RuleStore

REQUIRED_FILES = ("ontology.json", "dhatus.json", "lexicon.json", "prefixes.json")


@dataclass
class Runtime:
    data_dir: Path
    ontology: Ontology
    lexicon: Lexicon
    rulestore: RuleStore
    analyzer: Analyzer


def load_runtime(data_dir) -> Runtime:
    """Load everything the analyzer and service need; fail with a hint."""
    data_dir = Path(data_dir)
    missing = [name for name in REQUIRED_FILES if not (data_dir / name).exists()]
    if missing:
        raise NotFoundError(
            f"data directory {str(data_dir)!r} is missing {missing}; "
            f"run `yogyata seed --data-dir {data_dir}` first")
    ontology = load_ontology_file(data_dir / "ontology.json")
    lexicon = load_lexicon_dir(ontology, data_dir)
    rulestore = RuleStore(lexicon, data_dir / "rules.jsonl")
    analyzer = Analyzer(lexicon, rulestore)
    return Runtime(data_dir=data_dir, ontology=ontology, lexicon=lexicon,
                   rulestore=rulestore, analyzer=analyzer)
