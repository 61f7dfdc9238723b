"""Exception types raised across the package."""


class MorphgenError(Exception):
    """Base class for all errors raised by this package."""


class LinedError(MorphgenError):
    """Error tied to a source line of some text input."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.message = message
        self.line = line


class FSParseError(LinedError):
    """Malformed feature-structure text."""


class GrammarParseError(LinedError):
    """Malformed grammar declaration text."""


class GrammarBuildError(MorphgenError):
    """One or more declarations could not be assembled into a valid hierarchy.

    ``errors`` holds one human-readable diagnostic per problem found.
    """

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        head = self.errors[0] if self.errors else "grammar build failed"
        more = f" (+{len(self.errors) - 1} more)" if len(self.errors) > 1 else ""
        super().__init__(head + more)


class RuleCompileError(MorphgenError):
    """A rewrite rule's pattern or operator list cannot be compiled."""


class NoClauseMatched(MorphgenError):
    """No clause of a rewrite rule matched the input string."""


class OperatorError(MorphgenError):
    """An edit operator could not apply to the current string."""


class UnclassifiableInput(MorphgenError):
    """No child of the hierarchy root matched the feature structure."""


class MissingBaseFeature(MorphgenError):
    """The feature structure lacks a string-valued base feature."""


class UnhandledForm(MorphgenError):
    """Strict mode: classification reached a node with nothing attached."""


class LexiconError(LinedError):
    """Malformed or inconsistent lexicon record."""


class CorpusError(LinedError):
    """Malformed expected-forms corpus record."""
