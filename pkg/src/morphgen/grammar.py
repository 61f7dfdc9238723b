"""Parser and printer for the grammar declaration language.

A grammar file is a sequence of parenthesized declarations; ``;`` starts a
comment. The declaration kinds:

    (morph-form <name> <parent> <condition>)
        Adds a node under <parent>. The root node is named ``*`` and always
        exists. With the parent omitted, the node is declared as a sibling
        of the previous morph-form (it reuses that declaration's parent).

    (morph-rule <name> <clause>...)
        String-rewrite rule attached to the node of the same name. Each
        clause is (<pattern> <operator>...); clauses are tried in order and
        the first whose pattern matches fires. The empty pattern "" matches
        any string. Patterns are regular expressions and may use the macro
        %{class} for a declared character class.

    (morph-allomorph <node> <feature>)
        Stem selection: generation at <node> returns the value of <feature>
        from the input instead of rewriting, falling back to the base
        feature when <feature> is absent.

    (morph-equivalence <owner> (<node>...))
        The listed nodes reuse the rule attached to <owner>.

    (morph-class <name> "<letters>")
        Declares the character class named by %{name} in patterns. Built-in
        defaults ``cons`` and ``vowel`` cover the transliteration alphabet
        and may be overridden.

A condition is a (feature value) pair or a combination built with
(and ...), (or ...) and (not ...). Dots in the feature position address
nested structures: (subject.number sg).

Operator forms inside a clause:

    (+p "txt")   add prefix          (+s "txt")   add suffix
    (-p "txt")   delete prefix       (-s "txt")   delete suffix
    (rp "o" "n") replace prefix      (rs "o" "n") replace suffix
    (ri *N* "n") replace capture group N
    (-i *N*)     delete capture group N
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from ._sexpr import QuotedString, format_atom, quote, read_forms
from .errors import GrammarParseError
from .featstruct import AllOf, AnyOf, Fvp, NotOf


# ---------------------------------------------------------------------------
# declaration types

@dataclass(frozen=True)
class Operator:
    pass


@dataclass(frozen=True)
class AddPrefix(Operator):
    text: str


@dataclass(frozen=True)
class AddSuffix(Operator):
    text: str


@dataclass(frozen=True)
class DeletePrefix(Operator):
    text: str


@dataclass(frozen=True)
class DeleteSuffix(Operator):
    text: str


@dataclass(frozen=True)
class ReplacePrefix(Operator):
    old: str
    new: str


@dataclass(frozen=True)
class ReplaceSuffix(Operator):
    old: str
    new: str


@dataclass(frozen=True)
class ReplaceGroup(Operator):
    group: int
    new: str


@dataclass(frozen=True)
class DeleteGroup(Operator):
    group: int


@dataclass(frozen=True)
class Clause:
    pattern: str
    operators: tuple

    def __post_init__(self):
        if not self.operators:
            raise ValueError("clause requires at least one operator")


@dataclass(frozen=True)
class MorphForm:
    name: str
    parent: str
    condition: object
    line: int = field(default=None, compare=False)


@dataclass(frozen=True)
class MorphRule:
    name: str
    clauses: tuple
    line: int = field(default=None, compare=False)


@dataclass(frozen=True)
class MorphAllomorph:
    node: str
    feature: str
    line: int = field(default=None, compare=False)


@dataclass(frozen=True)
class MorphEquivalence:
    source: str
    targets: tuple
    line: int = field(default=None, compare=False)


@dataclass(frozen=True)
class CharClass:
    name: str
    members: frozenset
    line: int = field(default=None, compare=False)


GrammarDecl = Union[MorphForm, MorphRule, MorphAllomorph, MorphEquivalence, CharClass]


# ---------------------------------------------------------------------------
# built-in character classes

# Letter characters of the transliteration alphabet that pattern as
# consonants in stems (0, w and y included; A and Y excluded; the vowel and
# nunation diacritics a i u F K M o G excluded).
CONSONANT_LETTERS = "bt#jHxd>rzsšSDTZ`<fqklmnhwy0^ç~V@v"

# Plain vowel signs plus the long-vowel carrier A; long vowels are written
# as sequences (aA, iy, uw), so w and y stay in the consonant class.
VOWEL_LETTERS = "aiuA"


def default_char_classes():
    """The character classes available to every grammar unless overridden."""
    return [
        CharClass("cons", frozenset(CONSONANT_LETTERS)),
        CharClass("vowel", frozenset(VOWEL_LETTERS)),
    ]


# ---------------------------------------------------------------------------
# parsing

_GROUP_REF = re.compile(r"^\*(\d+)\*$")

_OPERATOR_ARITY = {
    "+p": 1, "+s": 1, "-p": 1, "-s": 1,
    "rp": 2, "rs": 2, "ri": 2, "-i": 1,
}


def parse_grammar(text):
    """Parse grammar text into declarations in source order."""
    decls = []
    previous_parent = None
    for form, line in read_forms(text, GrammarParseError):
        if not isinstance(form, list) or not form or isinstance(form[0], list):
            raise GrammarParseError("expected a (keyword ...) declaration", line)
        keyword = str(form[0])
        args = form[1:]
        if keyword == "morph-form":
            decl = _parse_form(args, line, previous_parent)
            previous_parent = decl.parent
        elif keyword == "morph-rule":
            decl = _parse_rule(args, line)
        elif keyword == "morph-allomorph":
            decl = _parse_allomorph(args, line)
        elif keyword == "morph-equivalence":
            decl = _parse_equivalence(args, line)
        elif keyword == "morph-class":
            decl = _parse_class(args, line)
        else:
            raise GrammarParseError(f"unknown declaration keyword '{keyword}'", line)
        decls.append(decl)
    return decls


def _name(arg, what, line):
    if isinstance(arg, list) or not str(arg):
        raise GrammarParseError(f"{what} must be a non-empty name", line)
    return str(arg)


def _parse_form(args, line, previous_parent):
    if len(args) == 3:
        name = _name(args[0], "node name", line)
        parent = _name(args[1], "parent name", line)
        condition = _parse_condition(args[2], line)
    elif len(args) == 2:
        # Sibling shorthand: reuse the previous morph-form's parent.
        name = _name(args[0], "node name", line)
        if previous_parent is None:
            raise GrammarParseError(
                f"morph-form '{name}' omits its parent and no previous "
                "morph-form supplies one", line)
        parent = previous_parent
        condition = _parse_condition(args[1], line)
    else:
        raise GrammarParseError(
            "malformed morph-form: expected (morph-form <name> <parent> "
            "<condition>)", line)
    return MorphForm(name, parent, condition, line)


def _parse_condition(form, line):
    if not isinstance(form, list) or not form:
        raise GrammarParseError("condition must be a parenthesized form", line)
    head = form[0]
    if not isinstance(head, list) and not isinstance(head, QuotedString):
        key = str(head)
        if key in ("and", "or"):
            if len(form) < 2:
                raise GrammarParseError(
                    f"({key} ...) needs at least one condition", line)
            items = tuple(_parse_condition(f, line) for f in form[1:])
            return AllOf(items) if key == "and" else AnyOf(items)
        if key == "not":
            if len(form) != 2:
                raise GrammarParseError("(not ...) takes exactly one condition", line)
            return NotOf(_parse_condition(form[1], line))
    if len(form) != 2:
        raise GrammarParseError(
            "condition must be a (feature value) pair or an and/or/not form", line)
    feature, value = form
    if isinstance(feature, list) or isinstance(value, list):
        raise GrammarParseError("feature and value must be atomic", line)
    path = tuple(p for p in str(feature).split("."))
    if not all(path) or not path:
        raise GrammarParseError(f"bad feature path '{feature}'", line)
    return Fvp(path, str(value))


def _parse_rule(args, line):
    if len(args) < 2:
        raise GrammarParseError(
            "malformed morph-rule: expected (morph-rule <name> <clause>...)", line)
    name = _name(args[0], "rule name", line)
    clauses = tuple(_parse_clause(c, name, line) for c in args[1:])
    return MorphRule(name, clauses, line)


def _parse_clause(form, rule_name, line):
    if not isinstance(form, list) or not form:
        raise GrammarParseError(
            f"rule '{rule_name}': clause must be (<pattern> <operator>...)", line)
    pattern = form[0]
    if not isinstance(pattern, QuotedString):
        raise GrammarParseError(
            f"rule '{rule_name}': clause is missing its quoted pattern", line)
    if len(form) < 2:
        raise GrammarParseError(
            f"rule '{rule_name}': clause has no operators", line)
    operators = tuple(_parse_operator(op, rule_name, line) for op in form[1:])
    return Clause(str(pattern), operators)


def _parse_operator(form, rule_name, line):
    if not isinstance(form, list) or not form or isinstance(form[0], list):
        raise GrammarParseError(f"rule '{rule_name}': malformed operator", line)
    mnemonic = str(form[0])
    arity = _OPERATOR_ARITY.get(mnemonic)
    if arity is None:
        raise GrammarParseError(
            f"rule '{rule_name}': unknown operator mnemonic '{mnemonic}'", line)
    args = form[1:]
    if len(args) != arity:
        raise GrammarParseError(
            f"rule '{rule_name}': operator '{mnemonic}' takes {arity} "
            f"argument(s), got {len(args)}", line)

    def text(i):
        if isinstance(args[i], list):
            raise GrammarParseError(
                f"rule '{rule_name}': operator '{mnemonic}' argument must be "
                "a string", line)
        return str(args[i])

    def group(i):
        m = None if isinstance(args[i], list) else _GROUP_REF.match(str(args[i]))
        if not m or int(m.group(1)) < 1:
            raise GrammarParseError(
                f"rule '{rule_name}': bad group reference; expected *N* "
                "with N >= 1", line)
        return int(m.group(1))

    if mnemonic == "+p":
        return AddPrefix(text(0))
    if mnemonic == "+s":
        return AddSuffix(text(0))
    if mnemonic == "-p":
        return DeletePrefix(text(0))
    if mnemonic == "-s":
        return DeleteSuffix(text(0))
    if mnemonic == "rp":
        return ReplacePrefix(text(0), text(1))
    if mnemonic == "rs":
        return ReplaceSuffix(text(0), text(1))
    if mnemonic == "ri":
        return ReplaceGroup(group(0), text(1))
    return DeleteGroup(group(0))


def _parse_allomorph(args, line):
    if len(args) != 2:
        raise GrammarParseError(
            "malformed morph-allomorph: expected (morph-allomorph <node> "
            "<feature>)", line)
    return MorphAllomorph(
        _name(args[0], "node name", line),
        _name(args[1], "feature name", line), line)


def _parse_equivalence(args, line):
    if len(args) != 2 or not isinstance(args[1], list):
        raise GrammarParseError(
            "malformed morph-equivalence: expected (morph-equivalence "
            "<owner> (<node>...))", line)
    source = _name(args[0], "node name", line)
    if not args[1]:
        raise GrammarParseError("morph-equivalence target list is empty", line)
    targets = tuple(_name(t, "target name", line) for t in args[1])
    return MorphEquivalence(source, targets, line)


def _parse_class(args, line):
    if len(args) != 2:
        raise GrammarParseError(
            "malformed morph-class: expected (morph-class <name> "
            "\"<letters>\")", line)
    name = _name(args[0], "class name", line)
    if isinstance(args[1], list) or not str(args[1]):
        raise GrammarParseError(
            f"morph-class '{name}' needs a non-empty member string", line)
    return CharClass(name, frozenset(str(args[1])), line)


# ---------------------------------------------------------------------------
# printing

def format_grammar(decls):
    """Render declarations back to parseable text, one per line."""
    return "\n".join(_format_decl(d) for d in decls) + ("\n" if decls else "")


def _format_decl(decl):
    if isinstance(decl, MorphForm):
        return (f"(morph-form {decl.name} {decl.parent} "
                f"{format_condition(decl.condition)})")
    if isinstance(decl, MorphRule):
        clauses = " ".join(_format_clause(c) for c in decl.clauses)
        return f"(morph-rule {decl.name} {clauses})"
    if isinstance(decl, MorphAllomorph):
        return f"(morph-allomorph {decl.node} {decl.feature})"
    if isinstance(decl, MorphEquivalence):
        return (f"(morph-equivalence {decl.source} "
                f"({' '.join(decl.targets)}))")
    if isinstance(decl, CharClass):
        return f"(morph-class {decl.name} {quote(''.join(sorted(decl.members)))})"
    raise TypeError(f"not a grammar declaration: {decl!r}")


def format_condition(cond):
    if isinstance(cond, Fvp):
        return f"({'.'.join(cond.path)} {format_atom(cond.value)})"
    if isinstance(cond, AllOf):
        return "(and " + " ".join(format_condition(c) for c in cond.items) + ")"
    if isinstance(cond, AnyOf):
        return "(or " + " ".join(format_condition(c) for c in cond.items) + ")"
    if isinstance(cond, NotOf):
        return f"(not {format_condition(cond.item)})"
    raise TypeError(f"not a condition: {cond!r}")


def _format_clause(clause):
    ops = " ".join(_format_operator(op) for op in clause.operators)
    return f"({quote(clause.pattern)} {ops})"


def _format_operator(op):
    if isinstance(op, AddPrefix):
        return f"(+p {quote(op.text)})"
    if isinstance(op, AddSuffix):
        return f"(+s {quote(op.text)})"
    if isinstance(op, DeletePrefix):
        return f"(-p {quote(op.text)})"
    if isinstance(op, DeleteSuffix):
        return f"(-s {quote(op.text)})"
    if isinstance(op, ReplacePrefix):
        return f"(rp {quote(op.old)} {quote(op.new)})"
    if isinstance(op, ReplaceSuffix):
        return f"(rs {quote(op.old)} {quote(op.new)})"
    if isinstance(op, ReplaceGroup):
        return f"(ri *{op.group}* {quote(op.new)})"
    if isinstance(op, DeleteGroup):
        return f"(-i *{op.group}*)"
    raise TypeError(f"not an operator: {op!r}")
