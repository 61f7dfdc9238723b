"""Feature structures: the attribute-value records that drive generation.

A feature structure (FS) is an ordered list of feature-value pairs. Values
are atoms, double-quoted strings, or nested feature structures; atoms and
quoted strings of the same character content are the same value. The text
format looks like

    ((stem "rajul") (cat n) (number pl) (case nom) (def -))

with ``;`` starting a comment that runs to end of line.

Conditions test feature structures: an ``Fvp`` checks that the value found
at a feature path equals an expected atom, and ``AllOf``/``AnyOf``/``NotOf``
combine tests. Atom comparison is exact and case-sensitive (the Arabic
transliteration distinguishes letter case).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ._sexpr import format_atom, read_forms
from .errors import FSParseError


@dataclass(frozen=True)
class FeatureStructure:
    """Immutable ordered mapping of feature names to values."""

    entries: tuple = ()

    def feature_names(self):
        return tuple(name for name, _ in self.entries)


FeatureValue = Union[str, FeatureStructure]


# ---------------------------------------------------------------------------
# conditions

@dataclass(frozen=True)
class Fvp:
    """True iff the value at ``path`` is an atom equal to ``value``."""

    path: tuple
    value: str


@dataclass(frozen=True)
class AllOf:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("AllOf requires at least one condition")


@dataclass(frozen=True)
class AnyOf:
    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValueError("AnyOf requires at least one condition")


@dataclass(frozen=True)
class NotOf:
    item: "Condition"


Condition = Union[Fvp, AllOf, AnyOf, NotOf]


def eval_condition(cond, fs):
    """Evaluate a condition against a feature structure."""
    if isinstance(cond, Fvp):
        got = fs_get(fs, cond.path)
        return isinstance(got, str) and got == cond.value
    if isinstance(cond, AllOf):
        return all(eval_condition(c, fs) for c in cond.items)
    if isinstance(cond, AnyOf):
        return any(eval_condition(c, fs) for c in cond.items)
    if isinstance(cond, NotOf):
        return not eval_condition(cond.item, fs)
    raise TypeError(f"not a condition: {cond!r}")


# ---------------------------------------------------------------------------
# access

def fs_get(fs, path):
    """Follow ``path`` through nested structures; None when absent."""
    if not path:
        raise ValueError("empty feature path")
    value = fs
    for name in path:
        if not isinstance(value, FeatureStructure):
            return None
        value = next((v for n, v in value.entries if n == name), None)
        if value is None:
            return None
    return value


def fs_with(fs, feature, value):
    """Return a copy of ``fs`` with the top-level ``feature`` set to ``value``.

    An existing feature keeps its position; a new one is appended. The input
    structure is never modified.
    """
    entries = list(fs.entries)
    for i, (name, _) in enumerate(entries):
        if name == feature:
            entries[i] = (feature, value)
            break
    else:
        entries.append((feature, value))
    return FeatureStructure(tuple(entries))


# ---------------------------------------------------------------------------
# text format

def parse_fs(text):
    """Parse feature-structure text into a FeatureStructure."""
    forms = read_forms(text, FSParseError)
    if not forms:
        raise FSParseError("no feature structure found")
    if len(forms) > 1:
        raise FSParseError("trailing content after feature structure", forms[1][1])
    form, line = forms[0]
    if not isinstance(form, list):
        raise FSParseError("feature structure must be a parenthesized list", line)
    return _build_fs(form, line)


def _build_fs(items, line):
    entries = []
    seen = set()
    for item in items:
        if not isinstance(item, list) or len(item) != 2:
            raise FSParseError(
                f"expected a (feature value) pair, got {_describe(item)}", line)
        raw_name, raw_value = item
        if isinstance(raw_name, list):
            raise FSParseError("feature name must be an identifier", line)
        name = str(raw_name)
        if not name:
            raise FSParseError("empty feature name", line)
        if name in seen:
            raise FSParseError(f"duplicate feature '{name}'", line)
        seen.add(name)
        if isinstance(raw_value, list):
            value = _build_fs(raw_value, line)
        else:
            value = str(raw_value)
        entries.append((name, value))
    return FeatureStructure(tuple(entries))


def _describe(item):
    if isinstance(item, list):
        return f"a {len(item)}-element list"
    return repr(str(item))


def format_fs(fs):
    """Render a FeatureStructure in canonical single-line text.

    Values print as bare atoms whenever the content allows it, quoted
    otherwise; parsing the result reproduces the structure exactly.
    """
    return "(" + " ".join(
        f"({name} {_format_value(value)})" for name, value in fs.entries
    ) + ")"


def _format_value(value):
    if isinstance(value, FeatureStructure):
        return format_fs(value)
    return format_atom(value)
