"""Karaka-role compatibility engine for Sanskrit sentence analysis.

The package couples a semantic tag taxonomy, a root inventory with role
expectancies, a sense-tagged lexicon, and an annotated rule store, and
uses them to prune candidate role assignments for sentences given their
morphological readings.
"""

from .analyzer import (
    Analyzer,
    FullAnalysis,
    Karaka,
    Nominal,
    Participle,
    PruneReport,
    ResolvedAnalysis,
    RoleHypothesis,
    SentenceInput,
    Statement,
    Token,
    Verbal,
    Visheshana,
    case_to_roles,
)
from .config import AppConfig, load_config
from .errors import (
    AnalysisError,
    AuthenticationError,
    CycleError,
    DanglingParentError,
    DuplicateRuleError,
    EmptyExpectancyError,
    MissingSandhiError,
    NoAnalysisError,
    NotFoundError,
    ParseError,
    RangeError,
    UnknownLexemeError,
    UnknownTagError,
    ValidationError,
    YogyataError,
)
from .lexicon import (
    DhatuEntry,
    KarakaRole,
    LexemeEntry,
    LexemeSense,
    Lexicon,
    LWord,
    Prefix,
    load_dhatus,
    load_lexemes,
    load_prefixes,
)
from .ontology import Ontology, OntologyTag, load_ontology
from .rulestore import RuleStore, YogyataRule
from .runtime import Runtime, load_runtime
from .translit import Scheme, TransliterationResult, convert, transliterate

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
