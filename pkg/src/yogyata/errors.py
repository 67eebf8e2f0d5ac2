"""Exception hierarchy shared across the package."""


class YogyataError(Exception):
    """Base class for all domain errors."""


class ParseError(YogyataError):
    """A document could not be parsed; the message names the record and field."""


class CycleError(YogyataError):
    """The ontology parent relation contains a cycle."""

    def __init__(self, tag_id: str):
        self.tag_id = tag_id
        super().__init__(f"ontology cycle through tag {tag_id!r}")


class DanglingParentError(YogyataError):
    """A tag names a parent that does not exist."""

    def __init__(self, tag_id: str, parent_id: str):
        self.tag_id = tag_id
        self.parent_id = parent_id
        super().__init__(f"tag {tag_id!r} names unknown parent {parent_id!r}")


class UnknownTagError(YogyataError):
    """An ontology tag id does not resolve."""

    def __init__(self, tag_id: str, context: str = ""):
        self.tag_id = tag_id
        msg = f"unknown ontology tag {tag_id!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class NotFoundError(YogyataError):
    """A referenced entity (root, headword, sense, rule id) does not exist."""


class EmptyExpectancyError(YogyataError):
    """A verbal root was declared with an empty expectancy set."""


class MissingSandhiError(YogyataError):
    """A prefixed L-word was composed without its manually entered sandhi form."""


class ValidationError(YogyataError):
    """A record violates a domain invariant; the message names the offending field."""


class DuplicateRuleError(YogyataError):
    """An active rule already exists for the (l_word, headword, sense) triple."""


class RangeError(YogyataError):
    """A case number lies outside the supported 1..7 range."""


class AnalysisError(YogyataError):
    """A sentence input cannot be analyzed (e.g. no verbal reading)."""


class UnknownLexemeError(YogyataError):
    """A token stem or verb root does not resolve in the lexicon."""


class NoAnalysisError(YogyataError):
    """Every candidate analysis was pruned; carries the prune report."""

    def __init__(self, report):
        self.report = report
        super().__init__("all candidate analyses were pruned")


class AuthenticationError(YogyataError):
    """Login failed or a session token is missing, unknown, or expired."""
