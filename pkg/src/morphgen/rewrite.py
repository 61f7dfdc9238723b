"""Compilation and application of string-rewrite rules.

A rule's clauses are tried in source order against the input string; the
first clause whose pattern matches fires, and its operators apply left to
right, each to the output of the previous one. Capture-group spans come
from the firing clause's match against the original input and are re-based
as the operators edit the string, so a group edit after a prefix addition
still targets the intended characters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NoClauseMatched, OperatorError, RuleCompileError
from .grammar import (
    AddPrefix,
    AddSuffix,
    DeleteGroup,
    DeletePrefix,
    DeleteSuffix,
    ReplaceGroup,
    ReplacePrefix,
    ReplaceSuffix,
)

_CLASS_MACRO = re.compile(r"%\{([^{}]*)\}")


def _class_map(classes):
    if isinstance(classes, dict):
        return classes
    return {c.name: c for c in classes}


def expand_classes(pattern, classes):
    """Replace every %{name} macro with a bracketed member alternation."""
    mapping = _class_map(classes)

    def replace(match):
        name = match.group(1)
        cls = mapping.get(name)
        if cls is None:
            raise RuleCompileError(f"unknown character class '{name}'")
        return "[" + "".join(re.escape(c) for c in sorted(cls.members)) + "]"

    return _CLASS_MACRO.sub(replace, pattern)


@dataclass(frozen=True)
class CompiledClause:
    source: str
    regex: re.Pattern
    operators: tuple


@dataclass(frozen=True)
class CompiledRule:
    name: str
    clauses: tuple


@dataclass(frozen=True)
class RewriteResult:
    output: str
    clause_index: int


def compile_rule(decl, classes):
    """Compile a MorphRule declaration against the given character classes.

    Expands class macros, compiles the patterns, and validates that every
    group reference addresses a capture group of its clause's pattern.
    """
    compiled = []
    for index, clause in enumerate(decl.clauses):
        expanded = expand_classes(clause.pattern, classes)
        try:
            regex = re.compile(expanded)
        except re.error as exc:
            raise RuleCompileError(
                f"rule '{decl.name}' clause {index}: bad pattern "
                f"{clause.pattern!r}: {exc}") from exc
        for op in clause.operators:
            group = getattr(op, "group", None)
            if group is not None and group > regex.groups:
                raise RuleCompileError(
                    f"rule '{decl.name}' clause {index}: group *{group}* out "
                    f"of range; pattern has {regex.groups} group(s)")
        compiled.append(CompiledClause(clause.pattern, regex, clause.operators))
    return CompiledRule(decl.name, tuple(compiled))


def apply_rule(rule, text):
    """Rewrite ``text`` with the first matching clause of ``rule``."""
    for index, clause in enumerate(rule.clauses):
        match = clause.regex.search(text)
        if match is None:
            continue
        spans = [
            None if match.span(g) == (-1, -1) else match.span(g)
            for g in range(1, match.re.groups + 1)
        ]
        current = text
        for op in clause.operators:
            try:
                current, spans = _apply_edit(op, current, spans)
            except OperatorError as exc:
                raise OperatorError(
                    f"rule '{rule.name}' clause {index}: {exc}") from exc
        return RewriteResult(current, index)
    raise NoClauseMatched(f"rule '{rule.name}': no clause matches {text!r}")


def apply_operator(op, current, groups=()):
    """Apply a single operator to ``current``.

    ``groups`` holds (start, end) capture spans in current-string
    coordinates; group operators require the corresponding span.
    """
    output, _ = _apply_edit(op, current, list(groups))
    return output


def _apply_edit(op, current, spans):
    if isinstance(op, AddPrefix):
        return _edit(current, spans, 0, 0, op.text)
    if isinstance(op, AddSuffix):
        return _edit(current, spans, len(current), len(current), op.text)
    if isinstance(op, DeletePrefix):
        if not current.startswith(op.text):
            raise OperatorError(f"{current!r} does not start with {op.text!r}")
        return _edit(current, spans, 0, len(op.text), "")
    if isinstance(op, DeleteSuffix):
        if not current.endswith(op.text):
            raise OperatorError(f"{current!r} does not end with {op.text!r}")
        return _edit(current, spans, len(current) - len(op.text), len(current), "")
    if isinstance(op, ReplacePrefix):
        if not current.startswith(op.old):
            raise OperatorError(f"{current!r} does not start with {op.old!r}")
        return _edit(current, spans, 0, len(op.old), op.new)
    if isinstance(op, ReplaceSuffix):
        if not current.endswith(op.old):
            raise OperatorError(f"{current!r} does not end with {op.old!r}")
        return _edit(current, spans, len(current) - len(op.old), len(current), op.new)
    if isinstance(op, (ReplaceGroup, DeleteGroup)):
        index = op.group - 1
        if index >= len(spans):
            raise OperatorError(f"no capture group *{op.group}*")
        span = spans[index]
        if span is None:
            raise OperatorError(
                f"group *{op.group}* is unavailable (did not participate in "
                "the match or was invalidated by a previous edit)")
        text = op.new if isinstance(op, ReplaceGroup) else ""
        current, spans = _edit(current, spans, span[0], span[1], text)
        spans[index] = (span[0], span[0] + len(text))
        return current, spans
    raise TypeError(f"not an operator: {op!r}")


def _edit(current, spans, start, end, replacement):
    """Splice ``replacement`` over [start, end) and re-base group spans.

    Spans entirely before the edit keep their positions, spans entirely
    after it shift by the length delta, and spans overlapping the edited
    region are invalidated.
    """
    new = current[:start] + replacement + current[end:]
    delta = len(replacement) - (end - start)
    rebased = []
    for span in spans:
        if span is None:
            rebased.append(None)
            continue
        s, e = span
        if e <= start:
            rebased.append(span)
        elif s >= end:
            rebased.append((s + delta, e + delta))
        else:
            rebased.append(None)
    return new, rebased
