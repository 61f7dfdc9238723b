"""Morphological rule compiler and word-form generator.

A declarative grammar (a form hierarchy plus string-rewrite rules) is
compiled into a discrimination tree; feature structures describing the word
to generate are classified down the tree and the rule, allomorph selection,
or equivalence found there produces the surface string. Ships with a
complete Arabic noun grammar covering internal-change and suffixing plurals.
"""

import logging as _logging

from .errors import (
    CorpusError,
    FSParseError,
    GrammarBuildError,
    GrammarParseError,
    LexiconError,
    MissingBaseFeature,
    MorphgenError,
    NoClauseMatched,
    OperatorError,
    RuleCompileError,
    UnclassifiableInput,
    UnhandledForm,
)
from .featstruct import (
    AllOf,
    AnyOf,
    FeatureStructure,
    Fvp,
    NotOf,
    eval_condition,
    format_fs,
    fs_get,
    fs_with,
    parse_fs,
)
from .grammar import (
    CharClass,
    Clause,
    MorphAllomorph,
    MorphEquivalence,
    MorphForm,
    MorphRule,
    default_char_classes,
    format_grammar,
    parse_grammar,
)
from .hierarchy import (
    DEFAULT_PASSES,
    MorphHierarchy,
    MorphNode,
    PassTrace,
    build_hierarchy,
    classify,
    format_pass_trace,
    generate,
    generate_once,
    generate_once_with_trace,
    generate_with_trace,
    resolve_rule,
)
from .rewrite import (
    CompiledRule,
    RewriteResult,
    apply_operator,
    apply_rule,
    compile_rule,
    expand_classes,
)

__version__ = "0.1.0"

# Library logging stays quiet unless the application configures handlers;
# the CLI's --verbose flag surfaces the engine's diagnostics.
_logging.getLogger(__name__).addHandler(_logging.NullHandler())

__all__ = [
    "AllOf", "AnyOf", "CharClass", "Clause", "CompiledRule", "CorpusError",
    "DEFAULT_PASSES", "FSParseError", "FeatureStructure", "Fvp",
    "GrammarBuildError", "GrammarParseError", "LexiconError",
    "MissingBaseFeature", "MorphAllomorph", "MorphEquivalence", "MorphForm",
    "MorphHierarchy", "MorphNode", "MorphRule", "MorphgenError",
    "NoClauseMatched", "NotOf", "OperatorError", "PassTrace",
    "RewriteResult", "RuleCompileError", "UnclassifiableInput",
    "UnhandledForm", "apply_operator", "apply_rule", "build_hierarchy",
    "classify", "compile_rule", "default_char_classes", "eval_condition",
    "expand_classes", "format_fs", "format_grammar", "format_pass_trace",
    "fs_get", "fs_with", "generate", "generate_once",
    "generate_once_with_trace", "generate_with_trace", "parse_fs",
    "parse_grammar", "resolve_rule",
]
